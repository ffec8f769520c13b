#include <doctest.h>

#include "mahler/gridded.hpp"
#include "mahler/matq.hpp"
#include "mahler/subspace.hpp"

#include <random>

using namespace mahler;

namespace {

MatQ mat(size_t r, size_t c, std::initializer_list<long> entries) {
    std::vector<Rational> v;
    for (long e : entries) v.emplace_back(e);
    return MatQ(r, c, std::move(v));
}

MatQ random_mat(std::mt19937& rng, size_t r, size_t c, long height = 5) {
    std::uniform_int_distribution<long> d(-height, height);
    MatQ m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Rational(d(rng));
    return m;
}

// Random d-gridded matrix with the given permutation of {0..d-1}.
MatQ random_gridded_dense(std::mt19937& rng, size_t brows, size_t bcols, size_t bs, long d,
                          const std::vector<size_t>& sigma) {
    MatQ m(brows * bs, bcols * bs);
    std::uniform_int_distribution<long> val(-4, 4);
    for (size_t bi = 0; bi < brows; ++bi)
        for (size_t bj = 0; bj < bcols; ++bj) {
            if (bj % d != sigma[bi % d]) continue;
            for (size_t i = 0; i < bs; ++i)
                for (size_t j = 0; j < bs; ++j) m.at(bi * bs + i, bj * bs + j) = Rational(val(rng));
        }
    return m;
}

}  // namespace

TEST_CASE("kernel basics") {
    CHECK(kernel(MatQ(1, 2)).dim() == 2);          // zero row: full plane
    CHECK(kernel(MatQ::identity(3)).dim() == 0);   // identity: trivial kernel

    Subspace k = kernel(mat(2, 2, {1, 1, 1, 1}));
    CHECK(k.dim() == 1);
    CHECK(k.contains({Rational(1), Rational(-1)}));
}

TEST_CASE("image basics") {
    Subspace full2 = Subspace::full(2);
    CHECK(image(MatQ(2, 2), full2).dim() == 0);
    CHECK(image(MatQ::identity(2), full2) == full2);

    Subspace im = image(mat(2, 2, {1, 0, 0, 0}), full2);
    CHECK(im.dim() == 1);
    CHECK(im.contains({Rational(1), Rational(0)}));
    CHECK_THROWS_AS(image(MatQ(2, 3), full2), std::invalid_argument);
}

TEST_CASE("intersect basics") {
    Subspace e1 = Subspace::span(mat(2, 1, {1, 0}));
    Subspace e2 = Subspace::span(mat(2, 1, {0, 1}));
    Subspace diag = Subspace::span(mat(2, 1, {1, 1}));
    Subspace full2 = Subspace::full(2);

    CHECK(intersect(e1, full2) == e1);
    CHECK(intersect(e1, e2).dim() == 0);
    CHECK(intersect(full2, diag) == diag);
    CHECK_THROWS_AS(intersect(e1, Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("subspace canonicity") {
    std::mt19937 rng(8001);
    for (int t = 0; t < 80; ++t) {
        MatQ b = random_mat(rng, 6, 3);
        Subspace s = Subspace::span(b);
        // Random invertible column operations must not change the canonical form.
        MatQ c = random_mat(rng, 3, 3);
        while (c.rank() < 3) c = random_mat(rng, 3, 3);
        Subspace s2 = Subspace::span(b * c);
        CHECK(s == s2);
        CHECK(Subspace::span(MatQ::hcat(b, b * c)) == s);
    }
}

TEST_CASE("intersect algebra") {
    std::mt19937 rng(8002);
    for (int t = 0; t < 40; ++t) {
        Subspace s1 = Subspace::span(random_mat(rng, 5, 2));
        Subspace s2 = Subspace::span(random_mat(rng, 5, 3));
        Subspace s3 = Subspace::span(random_mat(rng, 5, 2));

        CHECK(intersect(s1, s2) == intersect(s2, s1));
        CHECK(intersect(s1, s1) == s1);
        CHECK(intersect(intersect(s1, s2), s3) == intersect(s1, intersect(s2, s3)));

        // dim(S1 ∩ S2) + dim(S1 + S2) = dim S1 + dim S2
        CHECK(intersect(s1, s2).dim() + subspace_sum(s1, s2).dim() == s1.dim() + s2.dim());
    }
}

TEST_CASE("solve_right") {
    MatQ f = mat(2, 2, {3, 1, 4, 1});
    CHECK(solve_right(MatQ::identity(2), f) == f);

    CHECK(solve_right(mat(2, 1, {1, 1}), mat(2, 1, {3, 3})) == mat(1, 1, {3}));

    // Rank-deficient E.
    CHECK_THROWS_AS(solve_right(mat(2, 2, {1, 1, 1, 1}), f), std::domain_error);
    // Inconsistent system: (1,1) basis cannot reach (1,0).
    CHECK_THROWS_AS(solve_right(mat(2, 1, {1, 1}), mat(2, 1, {1, 0})), std::domain_error);
}

TEST_CASE("solve_right on invariant subspaces") {
    std::mt19937 rng(8003);
    for (int t = 0; t < 40; ++t) {
        // Build an M-invariant space: take E spanning the image of M^2.
        MatQ m = random_mat(rng, 4, 4, 3);
        Subspace s = image(m, image(m, Subspace::full(4)));
        // Restriction of M to s need not be injective; only test when it is.
        Subspace ms = image(m, s);
        if (ms.dim() != s.dim() || s.dim() == 0) continue;
        MatQ e = s.basis();
        MatQ r = solve_right(e, m * e);
        CHECK(e * r == m * e);
    }
}

TEST_CASE("preimage agrees with kernel composition") {
    std::mt19937 rng(8004);
    for (int t = 0; t < 40; ++t) {
        MatQ m = random_mat(rng, 4, 4, 3);
        MatQ n = random_mat(rng, 2, 4, 3);
        Subspace direct = kernel(n * m);
        Subspace via = preimage(m, kernel(n));
        CHECK(direct == via);
    }
}

TEST_CASE("gridded_from_dense") {
    // Block-diagonal: sigma is the identity.
    std::mt19937 rng(8005);
    MatQ bd(8, 8);
    for (size_t b = 0; b < 4; ++b)
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) bd.at(b * 2 + i, b * 2 + j) = Rational(1 + (long)(b + i + j));
    GriddedMat g = GriddedMat::from_dense(bd, 2, 2);
    CHECK(g.sigma_one_based() == std::vector<size_t>{1, 2});
    CHECK(g.dense() == bd);

    // Zero matrix: identity by convention.
    GriddedMat z = GriddedMat::from_dense(MatQ(8, 8), 4, 2);
    CHECK(z.sigma_one_based() == std::vector<size_t>{1, 2, 3, 4});
    CHECK(z.dense() == MatQ(8, 8));

    // A matrix with two blocks in one block-row across classes is not gridded.
    MatQ bad(4, 4);
    bad.at(0, 0) = Rational(1);
    bad.at(0, 2) = Rational(1);
    CHECK_THROWS_AS(GriddedMat::from_dense(bad, 2, 2), std::domain_error);
}

TEST_CASE("gridded_mul equals dense product") {
    std::mt19937 rng(8006);
    for (int t = 0; t < 30; ++t) {
        long d = 2;
        std::vector<size_t> s1{static_cast<size_t>(t % 2), static_cast<size_t>(1 - t % 2)};
        std::vector<size_t> s2{static_cast<size_t>((t / 2) % 2), static_cast<size_t>(1 - (t / 2) % 2)};
        MatQ a = random_gridded_dense(rng, 4, 4, 2, d, s1);
        MatQ b = random_gridded_dense(rng, 4, 4, 2, d, s2);
        GriddedMat ga = GriddedMat::from_dense(a, d, 2);
        GriddedMat gb = GriddedMat::from_dense(b, d, 2);
        GriddedMat gc = gridded_mul(ga, gb);
        CHECK(gc.dense() == a * b);
        // Permutation of the product composes: sigma_b o sigma_a,
        // unless the product collapsed to zero blocks somewhere; spot-check
        // by reconstructing instead of comparing sigma directly when zero.
        if (!gc.dense().is_zero())
            for (size_t k = 0; k < 2; ++k) CHECK(gc.sigma(k) == gb.sigma(ga.sigma(k)));
    }
}

TEST_CASE("gridded identity behaves as unit") {
    std::mt19937 rng(8007);
    MatQ a = random_gridded_dense(rng, 6, 6, 2, 3, {1, 2, 0});
    GriddedMat ga = GriddedMat::from_dense(a, 3, 2);
    GriddedMat gi = GriddedMat::from_dense(MatQ::identity(12), 3, 2);
    CHECK(gridded_mul(ga, gi).dense() == a);
    CHECK(gridded_mul(gi, ga).dense() == a);
    CHECK(gridded_mul(gi, gi).sigma_one_based() == std::vector<size_t>{1, 2, 3});
}

TEST_CASE("gridded_kernel equals dense kernel") {
    std::mt19937 rng(8008);
    for (int t = 0; t < 30; ++t) {
        long d = 1 + t % 3;
        std::vector<size_t> sigma(static_cast<size_t>(d));
        for (size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        MatQ a = random_gridded_dense(rng, 3 + t % 3, 4, 2, d, sigma);
        GriddedMat ga = GriddedMat::from_dense(a, d, 2);
        CHECK(gridded_kernel(ga) == kernel(a));
    }

    CHECK(gridded_kernel(GriddedMat::from_dense(MatQ(6, 6), 3, 2)).dim() == 6);
    CHECK(gridded_kernel(GriddedMat::from_dense(MatQ::identity(6), 3, 2)).dim() == 0);
}
