#include "mahler/poly.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace mahler {

Poly Poly::monomial(const Rational& c, size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

long Poly::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero undefined");
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<long>(i);
    return 0;  // unreachable
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.c_;
    const size_t db = b.c_.size() - 1;
    std::vector<Rational> quo(a.c_.size() - db, Rational(0));
    const Rational lead = b.leading();
    for (size_t ii = a.c_.size(); ii > db; --ii) {
        const size_t i = ii - 1;
        Rational f = rem[i] / lead;
        if (!f.is_zero()) {
            quo[i - db] = f;
            for (size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace {

// Primitive integer coefficient vector: clear denominators, divide by the
// content. Keeps the pseudo-remainder sequence below from blowing up.
std::vector<Int> primitive_int(const Poly& p) {
    Int l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.num() * (l / c.den()));
    Int g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

void make_primitive(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    Int g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
}

// Quick coprimality filter: Euclid over Z/p. A degree-0 gcd mod p proves the
// rational gcd is 1 (for primitive inputs whose leading coefficients survive
// reduction); anything else is inconclusive and falls back to the exact PRS.
bool coprime_mod_p(const std::vector<Int>& a, const std::vector<Int>& b) {
    constexpr unsigned long kP = 2147483647UL;  // 2^31 - 1
    auto reduce = [](const std::vector<Int>& v) {
        std::vector<unsigned long> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = mpz_fdiv_ui(v[i].get_mpz_t(), kP);
        return r;
    };
    auto inv_mod = [](unsigned long x) {
        // Fermat: x^(p-2) mod p.
        unsigned long e = kP - 2;
        unsigned long base = x % kP, acc = 1;
        while (e) {
            if (e & 1) acc = static_cast<unsigned long>((static_cast<unsigned __int128>(acc) * base) % kP);
            base = static_cast<unsigned long>((static_cast<unsigned __int128>(base) * base) % kP);
            e >>= 1;
        }
        return acc;
    };
    std::vector<unsigned long> u = reduce(a), w = reduce(b);
    if (u.empty() || w.empty() || u.back() == 0 || w.back() == 0) return false;
    while (!w.empty()) {
        const unsigned long linv = inv_mod(w.back());
        while (u.size() >= w.size()) {
            const unsigned long f = static_cast<unsigned long>(
                (static_cast<unsigned __int128>(u.back()) * linv) % kP);
            const size_t shift = u.size() - w.size();
            if (f)
                for (size_t i = 0; i < w.size(); ++i) {
                    unsigned long sub = static_cast<unsigned long>(
                        (static_cast<unsigned __int128>(f) * w[i]) % kP);
                    u[shift + i] = (u[shift + i] + kP - sub) % kP;
                }
            u.pop_back();
            while (!u.empty() && u.back() == 0) u.pop_back();
            if (u.empty()) break;
        }
        std::swap(u, w);
    }
    return u.size() == 1;  // gcd mod p is a nonzero constant
}

Int eval_int(const std::vector<Int>& v, const Int& x) {
    Int acc(0);
    for (size_t i = v.size(); i-- > 0;) acc = acc * x + v[i];
    return acc;
}

// Exact division in Z[x]; empty result signals "does not divide".
std::optional<std::vector<Int>> exact_div_int(const std::vector<Int>& a,
                                              const std::vector<Int>& b) {
    if (a.size() < b.size()) return std::nullopt;
    std::vector<Int> rem = a;
    std::vector<Int> quo(a.size() - b.size() + 1);
    const Int& lb = b.back();
    for (size_t ii = rem.size(); ii >= b.size(); --ii) {
        const size_t i = ii - 1;
        if (rem[i] == 0) {
            quo[i - (b.size() - 1)] = 0;
            continue;
        }
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Int f = rem[i] / lb;
        quo[i - (b.size() - 1)] = f;
        const size_t shift = i - (b.size() - 1);
        for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= f * b[j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return quo;
}

// Heuristic gcd (GCDHEU): evaluate at a large integer, take the integer gcd,
// reconstruct a candidate from balanced base-xi digits, and verify it divides
// both inputs. Fast thanks to GMP's subquadratic integer gcd; the caller
// falls back to the pseudo-remainder sequence when it keeps failing.
std::optional<std::vector<Int>> heuristic_gcd_candidate(const std::vector<Int>& u,
                                                        const std::vector<Int>& v,
                                                        const Int& xi) {
    Int gu = eval_int(u, xi), gv = eval_int(v, xi);
    if (gu == 0 || gv == 0) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), gu.get_mpz_t(), gv.get_mpz_t());

    std::vector<Int> cand;
    while (g != 0) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
        if (r * 2 > xi) {
            r -= xi;
            q += 1;
        }
        cand.push_back(r);
        g = std::move(q);
    }
    make_primitive(cand);
    if (cand.empty()) return std::nullopt;
    return cand;
}

// lead(b)^k a - (...) b with the leading terms cancelled, over Z.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    const size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (a.size() > db) {
        Int top = a.back();
        const size_t shift = a.size() - 1 - db;
        for (auto& x : a) x *= lb;
        for (size_t i = 0; i <= db; ++i) a[shift + i] -= top * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

namespace {

std::vector<Int> gcd_int(std::vector<Int> u, std::vector<Int> v);

// Exact primitive pseudo-remainder sequence; the slow but unconditional path.
std::vector<Int> gcd_prs(std::vector<Int> u, std::vector<Int> v) {
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Int> r = pseudo_rem(std::move(u), v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

// gcd of primitive integer polynomials: modular coprimality filter first,
// then the heuristic gcd, then the pseudo-remainder sequence.
std::vector<Int> gcd_int(std::vector<Int> u, std::vector<Int> v) {
    if (u.empty()) return v;
    if (v.empty()) return u;
    if (coprime_mod_p(u, v)) return {Int(1)};

    Int maxc(0);
    for (const auto& x : u) {
        Int ax = abs(x);
        if (ax > maxc) maxc = ax;
    }
    for (const auto& x : v) {
        Int ax = abs(x);
        if (ax > maxc) maxc = ax;
    }
    Int xi = 2 * maxc + 29;
    for (int tries = 0; tries < 6; ++tries, xi = xi * 7 / 3 + 13) {
        auto cand = heuristic_gcd_candidate(u, v, xi);
        if (!cand) continue;
        if (cand->size() == 1) continue;  // "coprime" needs the exact path to confirm
        auto qu = exact_div_int(u, *cand);
        if (!qu) continue;
        auto qv = exact_div_int(v, *cand);
        if (!qv) continue;
        // cand is a common divisor; gcd(u, v) = cand * gcd(u/cand, v/cand).
        std::vector<Int> rest = gcd_int(std::move(*qu), std::move(*qv));
        if (rest.size() == 1) return *cand;
        std::vector<Int> prod(cand->size() + rest.size() - 1, Int(0));
        for (size_t i = 0; i < cand->size(); ++i)
            for (size_t j = 0; j < rest.size(); ++j) prod[i + j] += (*cand)[i] * rest[j];
        return prod;
    }
    return gcd_prs(std::move(u), std::move(v));
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> g = gcd_int(primitive_int(a), primitive_int(b));
    std::vector<Rational> out;
    out.reserve(g.size());
    for (const auto& x : g) out.emplace_back(x);
    return Poly(std::move(out)).monic();
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return *this * (Rational(1) / leading());
}

Poly Poly::shifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::unshifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    if (c_.size() <= k) throw std::logic_error("unshift below constant term");
    for (size_t i = 0; i < k; ++i)
        if (!c_[i].is_zero()) throw std::logic_error("unshift below constant term");
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly Poly::compose_zp(long p) const {
    if (is_zero()) return Poly();
    std::vector<Rational> v(static_cast<size_t>(degree()) * p + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i * p] = c_[i];
    return Poly(std::move(v));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (i == 0 || c != Rational(1)) {
            os << c.str();
            if (i > 0) os << "*";
        }
        if (i == 1) os << "z";
        else if (i > 1) os << "z^" << i;
        first = false;
    }
    return os.str();
}

Rational lagrange_bound(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("lagrange bound of zero polynomial");
    const Rational lead = f.leading().abs();
    Rational best(0);
    for (long k = 0; k < f.degree(); ++k) {
        Rational r = f.coeff(k).abs() / lead;
        if (r > best) best = r;
    }
    return Rational(1) + best;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolation abscissae must be distinct");
    Poly result;
    for (size_t i = 0; i < points.size(); ++i) {
        // Lagrange basis polynomial for node i, scaled by the ordinate.
        Poly li(points[i].second);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            Poly factor = Poly::z() - Poly(points[j].first);
            li = li * factor * (Rational(1) / (points[i].first - points[j].first));
        }
        result = result + li;
    }
    return result;
}

}  // namespace mahler
