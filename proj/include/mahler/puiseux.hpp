#pragma once

#include "mahler/mahler_system.hpp"

#include <map>
#include <optional>

namespace mahler {

/// Ramified matrix series sum_n C_n z^(n/d) with m x m rational coefficient
/// matrices, truncated: coefficients are known exactly for indices up to
/// known_up_to and zero below the lowest stored index.
class PuiseuxMatrix {
public:
    PuiseuxMatrix(long d, size_t m, long known_up_to)
        : d_(d), m_(m), known_up_to_(known_up_to), zero_(m, m) {}

    long d() const { return d_; }
    size_t m() const { return m_; }
    long known_up_to() const { return known_up_to_; }

    void set_coeff(long n, MatQ c);
    /// Coefficient at index n (exponent n/d); zero when not stored.
    const MatQ& coeff(long n) const;
    const std::map<long, MatQ>& coeffs() const { return c_; }

    /// Lowest index with a nonzero coefficient, if any.
    std::optional<long> valuation() const;

    bool is_zero() const { return c_.empty(); }

private:
    long d_;
    size_t m_;
    long known_up_to_;
    MatQ zero_;
    std::map<long, MatQ> c_;
};

/// The Mahler substitution z -> z^p on a Puiseux matrix: pure reindexing
/// n -> p*n at the same ramification.
PuiseuxMatrix phi_p_puiseux(const PuiseuxMatrix& g, long p);

/// Valuation of the gauge residual A*G - phi_p(G)*Lambda, in 1/d units.
/// The +infinity case (all computable coefficients vanish) is an explicit
/// variant, never a magic number.
class ResidualValuation {
public:
    static ResidualValuation infinity() { return ResidualValuation(true, 0); }
    static ResidualValuation finite(long v) { return ResidualValuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const;

    /// r >= bound, with +infinity above everything.
    bool at_least(long bound) const { return infinite_ || v_ >= bound; }

    friend bool operator==(const ResidualValuation& a, const ResidualValuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }

private:
    ResidualValuation(bool inf, long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    long v_;
};

/// Expands A*G - phi_p(G)*Lambda over every index the truncation at T
/// determines, and returns the smallest index carrying a nonzero
/// coefficient. For a correct gauge every coefficient at index
/// n < d*v0(A) + T + 1 vanishes.
ResidualValuation verify_gauge(const MahlerSystem& sys, const PuiseuxMatrix& g,
                               const MatQ& lambda, long t);

}  // namespace mahler
