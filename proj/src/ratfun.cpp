#include "mahler/ratfun.hpp"

#include <stdexcept>

namespace mahler {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divrem(num_, g).first;
            den_ = Poly::divrem(den_, g).first;
        }
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    // Cross-reduce first to keep intermediate degrees down.
    RatFun x(a.num_, b.den_);
    RatFun y(b.num_, a.den_);
    RatFun r;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_ * y.den_;
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFun(den_, num_);
}

Rational RatFun::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RatFun::str() const {
    if (den_ == Poly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

long valuation0(const RatFun& f) {
    if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
    long vd = f.den().coeff(0).is_zero() ? f.den().valuation() : 0;
    return f.num().valuation() - vd;
}

std::vector<Rational> laurent_coeffs(const RatFun& f, long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("laurent_coeffs: lo > hi");
    std::vector<Rational> out(static_cast<size_t>(hi - lo + 1), Rational(0));
    if (f.is_zero()) return out;

    const long vn = f.num().valuation();
    const long vd = f.den().valuation();
    const long v = vn - vd;
    if (v > hi) return out;

    const Poly n = f.num().unshifted(static_cast<size_t>(vn));
    const Poly d = f.den().unshifted(static_cast<size_t>(vd));

    // N/D = sum c_j z^j with D(0) != 0:  c_j = (N_j - sum_{i>=1} D_i c_{j-i}) / D_0.
    const size_t count = static_cast<size_t>(hi - v + 1);
    std::vector<Rational> c(count);
    const Rational d0inv = Rational(1) / d.coeff(0);
    for (size_t j = 0; j < count; ++j) {
        Rational acc = n.coeff(j);
        const size_t imax = std::min<size_t>(j, static_cast<size_t>(d.degree()));
        for (size_t i = 1; i <= imax; ++i) acc -= d.coeff(i) * c[j - i];
        c[j] = acc * d0inv;
    }
    for (long nidx = std::max(lo, v); nidx <= hi; ++nidx)
        out[static_cast<size_t>(nidx - lo)] = c[static_cast<size_t>(nidx - v)];
    return out;
}

}  // namespace mahler
