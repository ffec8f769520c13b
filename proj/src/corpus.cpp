#include "mahler/corpus.hpp"

#include "mahler/regsing.hpp"

#include <stdexcept>

namespace mahler {

namespace {

// Sparse polynomial builder: sum of coeff * z^exp terms.
Poly sparse(std::initializer_list<std::pair<long, size_t>> terms) {
    Poly p;
    for (const auto& [c, e] : terms) p = p + Poly::monomial(Rational(c), e);
    return p;
}

}  // namespace

NamedSystem example_order2() {
    // Coefficients of the defining scalar equation.
    const Poly lead = sparse({{1, 3}}) * sparse({{1, 0}, {-1, 3}, {1, 6}}) *
                      sparse({{1, 0}, {-1, 7}, {-1, 10}});          // z^3 (1-z^3+z^6)(1-z^7-z^10)
    const Poly mid = sparse({{1, 0}, {-1, 28}, {-1, 31}, {-1, 37}, {-1, 40}});
    const Poly low = sparse({{1, 6}}) * sparse({{1, 0}, {1, 1}}) *
                     sparse({{1, 0}, {-1, 21}, {-1, 30}});          // z^6 (1+z)(1-z^21-z^30)

    RatFunMat a(2, 2);
    a.at(0, 1) = RatFun(1);
    a.at(1, 0) = -RatFun(low, lead);
    a.at(1, 1) = RatFun(mid, lead);
    return NamedSystem{"order2", MahlerSystem(3, std::move(a)), true, 2, 2};
}

NamedSystem rudin_shapiro() {
    RatFunMat a(2, 2);
    a.at(0, 0) = RatFun(Rational(1, 2));
    a.at(0, 1) = RatFun(Rational(1, 2));
    a.at(1, 0) = RatFun(Poly(Rational(1)), sparse({{2, 1}}));
    a.at(1, 1) = -a.at(1, 0);
    return NamedSystem{"rudin_shapiro", MahlerSystem(2, std::move(a)), false, std::nullopt,
                       std::nullopt};
}

NamedSystem baum_sweet_variant() {
    RatFunMat c(3, 3);
    c.at(0, 0) = RatFun(1);
    c.at(0, 1) = RatFun::z();
    c.at(1, 0) = RatFun::z();
    c.at(2, 1) = RatFun(1);
    c.at(2, 2) = RatFun(sparse({{1, 0}, {1, 1}}));
    return NamedSystem{"baum_sweet_variant", MahlerSystem(2, c.inverse()), false, std::nullopt,
                       std::nullopt};
}

NamedSystem order1_homogeneous(const RatFun& a, long p) {
    if (a.is_zero()) throw std::invalid_argument("order-1 coefficient must be nonzero");
    RatFunMat m(1, 1);
    m.at(0, 0) = a;
    return NamedSystem{"order1_homogeneous", MahlerSystem(p, std::move(m)), true, std::nullopt,
                       std::nullopt};
}

NamedSystem order1_inhomogeneous(const Poly& qm1, const Poly& q0, const Poly& q1, long p) {
    if (q0.is_zero() || q1.is_zero())
        throw std::invalid_argument("order-1 inhomogeneous equation needs q0 q1 != 0");
    RatFunMat a(2, 2);
    a.at(0, 0) = -RatFun(q0, q1);
    a.at(0, 1) = -RatFun(qm1, q1);
    a.at(1, 1) = RatFun(1);
    return NamedSystem{"order1_inhomogeneous", MahlerSystem(p, std::move(a)), std::nullopt,
                       std::nullopt, std::nullopt};
}

long oracle_dim_naive(const MahlerSystem& sys, long d, long window) {
    BlockPair pair = build_MN(sys, d);
    if (window < pair.bounds.c) throw std::invalid_argument("oracle window below c_d");

    const Subspace kerN = pair.bounds.nu == pair.bounds.mu
                              ? Subspace::full(static_cast<size_t>(pair.bounds.c))
                              : kernel(pair.N);
    Subspace x = kerN;
    Subspace s = kerN;
    for (long n = 1; n <= window; ++n) {
        s = image(pair.M, s);
        x = intersect(x, s);
    }
    Subspace t = kerN;
    for (long n = 1; n <= window; ++n) {
        t = preimage(pair.M, t);
        x = intersect(x, t);
    }
    return static_cast<long>(x.dim());
}

std::vector<NamedSystem> all_named() {
    std::vector<NamedSystem> v;
    v.push_back(example_order2());
    v.push_back(rudin_shapiro());
    v.push_back(baum_sweet_variant());
    v.push_back(order1_homogeneous(RatFun(Poly(Rational(1)), Poly::z()), 2));
    v.back().name = "order1";
    return v;
}

}  // namespace mahler
