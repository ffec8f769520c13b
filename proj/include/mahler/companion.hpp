#pragma once

#include "mahler/mahler_system.hpp"

#include <vector>

namespace mahler {

/// Gauge to companion form: phi_p(P) A P^{-1} is the companion matrix with
/// last row q, and P(z0) is the identity.
struct CompanionForm {
    RatFunMat P;
    std::vector<RatFun> q;  // q_0 .. q_{m-1}
    Rational z0;
};

struct HullPoint {
    Int x, y;
    friend bool operator==(const HullPoint& a, const HullPoint& b) { return a.x == b.x && a.y == b.y; }
};

/// Lower convex hull vertices and the (strictly increasing) slopes between
/// consecutive vertices.
struct Hull {
    std::vector<HullPoint> vertices;
    std::vector<Rational> slopes;
};

/// Hull plus the ramification index d = lcm of the slope denominators
/// coprime to p.
struct HullResult {
    Hull hull;
    long d;
};

/// Interpolation base point: an integer >= 2 strictly exceeding the moduli of
/// all roots of the determinant numerator and of every entry denominator, so
/// A(z0^(p^k)) is defined and invertible for all k.
Rational pick_z0(const MahlerSystem& sys);

/// Algorithm: build the cyclic row vector by interpolation at z0^(p^i), then
/// stack rows r_{i+1} = phi_p(r_i) A.
CompanionForm cyclic_gauge(const MahlerSystem& sys);

/// Lower convex envelope with exact slope comparisons; abscissae must be
/// strictly increasing. Collinear interior points are dropped.
Hull lower_hull(std::vector<HullPoint> points);

/// Runs cyclic_gauge, forms the hull of {(p^i, v0(q_i)) : q_i != 0} together
/// with (p^m, 0), and returns d = lcm of the slope denominators coprime to p
/// (1 when the set is empty). The result lies in {1..p^m - 1} with
/// gcd(d, p) = 1.
HullResult ramification_index(const MahlerSystem& sys);

/// The companion matrix with ones on the superdiagonal and last row q.
RatFunMat companion_matrix(const std::vector<RatFun>& q);

}  // namespace mahler
