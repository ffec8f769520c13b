#pragma once

#include "mahler/mahler_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mahler {

/// A ready-made system with the externally known facts about it. Expected
/// fields are only set where the source states them.
struct NamedSystem {
    std::string name;
    MahlerSystem sys;
    std::optional<bool> expected_regular_singular;
    std::optional<long> expected_d;
    std::optional<long> expected_dimX;
};

/// The order-2 system of the 3-Mahler equation
/// z^3 (1-z^3+z^6)(1-z^7-z^10) phi^2(y) - (1-z^28-z^31-z^37-z^40) phi(y)
///   + z^6 (1+z)(1-z^21-z^30) y = 0.
/// Regular singular with d = 2 and dim X = 2.
NamedSystem example_order2();

/// phi_2(Y) = (1/2) (1 1; 1/z -1/z) Y, the Rudin-Shapiro generating system.
/// Not regular singular; at d = 3 the space X has dimension 1.
NamedSystem rudin_shapiro();

/// phi_2(Y) = (1 z 0; z 0 0; 0 1 1+z)^{-1} Y, a Baum-Sweet-like automatic
/// system that is not regular singular.
NamedSystem baum_sweet_variant();

/// phi_p(y) = a y; regular singular for every nonzero a.
NamedSystem order1_homogeneous(const RatFun& a, long p);

/// Companion system of q_{-1} + q_0 y + q_1 phi_p(y) = 0:
/// A = (-q_0/q_1  -q_{-1}/q_1; 0 1). Requires q_0 q_1 != 0.
NamedSystem order1_inhomogeneous(const Poly& qm1, const Poly& q0, const Poly& q1, long p);

/// Brute-force dimension of the intersection over |n| <= window of
/// M^n ker(N): dense operations only, no early exit, positive powers by
/// iterated image and negative powers by iterated preimage. Requires
/// window >= c_d. Independent check for compute_X.
long oracle_dim_naive(const MahlerSystem& sys, long d, long window);

/// Corpus systems addressable by name (for the CLI).
std::vector<NamedSystem> all_named();

}  // namespace mahler
