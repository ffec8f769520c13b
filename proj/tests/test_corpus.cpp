#include <doctest.h>

#include "mahler/corpus.hpp"
#include "mahler/regsing.hpp"

#include <random>

using namespace mahler;

TEST_CASE("expected summaries match decide") {
    for (auto& named : all_named()) {
        Verdict v = decide(named.sys, 4);
        if (named.expected_regular_singular) CHECK(v.regular_singular == *named.expected_regular_singular);
        if (named.expected_d) CHECK(v.d == *named.expected_d);
        if (named.expected_dimX) CHECK(v.dimX == *named.expected_dimX);
    }
}

TEST_CASE("order-2 example facts") {
    NamedSystem ns = example_order2();
    CHECK(ns.sys.v0A() == -3);
    Bounds b = bounds(ns.sys, 2);
    CHECK(b.nu == -3);
    CHECK(b.mu == 6);
    Verdict v = decide(ns.sys, 4);
    CHECK(v.regular_singular);
    CHECK(*v.Lambda == MatQ::identity(2));
}

TEST_CASE("rudin_shapiro facts") {
    NamedSystem ns = rudin_shapiro();
    CHECK_FALSE(decide(ns.sys, 4).regular_singular);
    CHECK(decide_fixed_d(ns.sys, 3).verdict.dimX == 1);
    long dim1 = decide_fixed_d(ns.sys, 1).verdict.dimX;
    CHECK(dim1 < 2);
    // Cross-check the d = 1 dimension against the wide-window naive path.
    CHECK(oracle_dim_naive(ns.sys, 1, 2 * bounds(ns.sys, 1).c) == dim1);
}

TEST_CASE("baum_sweet_variant facts") {
    // det of the printed matrix is -z^2 (1+z), nonzero, by cofactor expansion.
    RatFunMat c(3, 3);
    c.at(0, 0) = RatFun(1);
    c.at(0, 1) = RatFun::z();
    c.at(1, 0) = RatFun::z();
    c.at(2, 1) = RatFun(1);
    c.at(2, 2) = RatFun(Poly(std::vector<Rational>{Rational(1), Rational(1)}));
    Poly expect_det = Poly(std::vector<Rational>{Rational(0), Rational(0), Rational(-1), Rational(-1)});
    CHECK(c.det() == RatFun(expect_det));

    NamedSystem ns = baum_sweet_variant();
    // The system's matrix is the inverse of the printed one.
    CHECK(ns.sys.Ainv() == c);
    CHECK(v0_matrix(ns.sys.Ainv()) == 0);
    CHECK_FALSE(decide(ns.sys, 4).regular_singular);
}

TEST_CASE("order1_homogeneous") {
    // phi_2(y) = y/z: the hand gauge z^{-1} conjugates to the constant 1.
    NamedSystem invz = order1_homogeneous(RatFun(Poly(Rational(1)), Poly::z()), 2);
    Verdict v = decide(invz.sys, 4);
    REQUIRE(v.regular_singular);
    CHECK(*v.Lambda == MatQ::identity(1));
    CHECK(v.gauge->coeff(-1) == MatQ::identity(1));
    for (long n = 0; n <= v.gauge->known_up_to(); ++n) CHECK(v.gauge->coeff(n).is_zero());

    // Constant coefficient: Lambda = [[2]], Gamma = I.
    NamedSystem two = order1_homogeneous(RatFun(2), 2);
    Verdict v2 = decide(two.sys, 4);
    REQUIRE(v2.regular_singular);
    CHECK(v2.Lambda->at(0, 0) == Rational(2));
    CHECK(v2.gauge->coeff(0) == MatQ::identity(1));

    // Positive valuation coefficient.
    Poly a = Poly::monomial(Rational(1), 3) + Poly::monomial(Rational(1), 4);  // z^3 (1+z)
    CHECK(decide(order1_homogeneous(RatFun(a), 2).sys, 4).regular_singular);

    CHECK_THROWS_AS(order1_homogeneous(RatFun(), 2), std::invalid_argument);
}

TEST_CASE("order1_inhomogeneous") {
    // The (q_{-1}, q_0, q_1) = (-1, -1, 1) instance from the literature: its
    // matrix is the constant (1 1; 0 1), so the verdict is regular singular
    // with Lambda equal to that matrix. Frozen as a regression value.
    NamedSystem ns = order1_inhomogeneous(Poly(Rational(-1)), Poly(Rational(-1)),
                                          Poly(Rational(1)), 2);
    Verdict v = decide(ns.sys, 4);
    CHECK(v.regular_singular);
    CHECK(v.d == 1);
    CHECK(v.dimX == 2);
    CHECK(*v.Lambda == MatQ(2, 2, {Rational(1), Rational(1), Rational(0), Rational(1)}));

    CHECK_THROWS_AS(order1_inhomogeneous(Poly(Rational(1)), Poly(), Poly(Rational(1)), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(order1_inhomogeneous(Poly(Rational(1)), Poly(Rational(1)), Poly(), 2),
                    std::invalid_argument);
}

TEST_CASE("inhomogeneous equations with a rational solution are regular singular") {
    // Choose y, q0, q1 and solve for q_{-1} so that y is a solution; the
    // sufficient condition then promises a positive verdict.
    std::mt19937 rng(12001);
    std::uniform_int_distribution<long> cd(-3, 3);
    for (int t = 0; t < 6; ++t) {
        const long p = (t % 2) ? 2 : 3;
        Poly y(std::vector<Rational>{Rational(cd(rng)), Rational(cd(rng)), Rational(1)});
        Poly q0(std::vector<Rational>{Rational(cd(rng)), Rational(1)});
        Poly q1(std::vector<Rational>{Rational(1), Rational(cd(rng))});
        if (q0.is_zero() || q1.is_zero()) continue;
        Poly qm1 = -(q0 * y) - q1 * y.compose_zp(p);
        if (qm1.is_zero()) continue;
        NamedSystem ns = order1_inhomogeneous(qm1, q0, q1, p);
        CHECK(decide(ns.sys, 3).regular_singular);
    }
}

TEST_CASE("oracle_dim_naive matches compute_X") {
    NamedSystem order2 = example_order2();
    CHECK(oracle_dim_naive(order2.sys, 2, 2 * bounds(order2.sys, 2).c) == 2);

    NamedSystem rs = rudin_shapiro();
    CHECK(oracle_dim_naive(rs.sys, 3, 2 * bounds(rs.sys, 3).c) == 1);

    CHECK_THROWS_AS(oracle_dim_naive(rs.sys, 3, 2), std::invalid_argument);
}
