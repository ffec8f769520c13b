#pragma once

// Shared test data transcribed from external sources, plus small helpers the
// suites use to cross-check series output.

#include "mahler/puiseux.hpp"
#include "mahler/matq.hpp"

#include <vector>

namespace fixtures {

using namespace mahler;

// The two basis vectors of X for the order-2 example (d = 2, window
// [-3, 6], coordinates blocked in pairs):
//   v1 = pi(column (f1, f3)), v2 = pi(column (f2, 0)).
inline std::vector<Rational> order2_vector1() {
    std::vector<long> v{0, 1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, -1, 0, 0, -1, 0, 0, 0};
    return std::vector<Rational>(v.begin(), v.end());
}

inline std::vector<Rational> order2_vector2() {
    std::vector<Rational> v(20, Rational(0));
    v[18] = Rational(-1);
    return v;
}

// The published gauge truncation of the order-2 example: columns (f1, f3)
// and (f2, 0) with
//   f1 = z^(-1/2) - z^(1/2) + z^(3/2) - ... + z^(15/2)
//   f2 = -z^3 + z^4 - z^5 + 2 z^6 - 2 z^7 + 2 z^8
//   f3 = z^(-3/2) - z^(3/2) + z^(9/2) - z^(15/2)
inline PuiseuxMatrix order2_gauge() {
    PuiseuxMatrix g(2, 2, 16);
    auto add = [&](long n, size_t i, size_t j, long val) {
        MatQ c = g.coeff(n);
        c.at(i, j) = Rational(val);
        g.set_coeff(n, c);
    };
    long sign = 1;
    for (long n = -1; n <= 15; n += 2, sign = -sign) add(n, 0, 0, sign);     // f1
    add(6, 0, 1, -1); add(8, 0, 1, 1); add(10, 0, 1, -1);                    // f2
    add(12, 0, 1, 2); add(14, 0, 1, -2); add(16, 0, 1, 2);
    add(-3, 1, 0, 1); add(3, 1, 0, -1); add(9, 1, 0, 1); add(15, 1, 0, -1);  // f3
    return g;
}

// Laurent coefficients of the inverse of the order-2 example matrix, derived
// by hand from the closed forms
//   (A^{-1})_{11} series: -b/a = (1 - z^28 - ...) / (z^6 (1+z)(1 - z^21 - z^30))
//   (A^{-1})_{12} series: 1/a = -(1 - z^3 + z^6 - z^7 - z^16) / (z^3 (1+z)(1 - z^21 - z^30))
//   second row: (1, 0) constant.
// Valid for -6 <= k <= 14 (below the z^21 and z^28 corrections).
inline MatQ order2_ainv_coeff(long k) {
    MatQ b(2, 2);
    if (k >= -6) b.at(0, 0) = Rational((k % 2 == 0) ? 1 : -1);
    if (k >= -3) {
        // -[z^(k+3)] (1 - z^3 + z^6 - z^7 - z^16) * sum (-1)^j z^j
        long idx = k + 3;
        long acc = 0;
        const std::pair<long, long> terms[] = {{1, 0}, {-1, 3}, {1, 6}, {-1, 7}, {-1, 16}};
        for (auto [c, e] : terms)
            if (idx >= e) acc += c * ((idx - e) % 2 == 0 ? 1 : -1);
        b.at(0, 1) = Rational(-acc);
    }
    if (k == 0) b.at(1, 0) = Rational(1);
    return b;
}

}  // namespace fixtures
