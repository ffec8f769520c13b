#pragma once

#include "mahler/ratfun_mat.hpp"

#include <map>

namespace mahler {

/// The Mahler system phi_p(Y) = A Y: the pair (p, A) together with the
/// cached inverse and valuations everything downstream needs.
class MahlerSystem {
public:
    /// Throws std::domain_error("matrix not invertible over Q(z)") when
    /// det(A) = 0 and std::invalid_argument for p < 2 / non-square A.
    MahlerSystem(long p, RatFunMat a);

    long p() const { return p_; }
    size_t m() const { return m_; }
    const RatFunMat& A() const { return a_; }
    const RatFunMat& Ainv() const { return ainv_; }
    long v0A() const { return v0a_; }
    long v0Ainv() const { return v0ainv_; }

private:
    long p_;
    size_t m_;
    RatFunMat a_, ainv_;
    long v0a_, v0ainv_;
};

/// Window of Laurent coefficient matrices B_k(d) of B(d) = phi_d(A)^{-1}.
/// B_k(d) vanishes off multiples of d, and B_{dk}(d) is the k-th Laurent
/// coefficient matrix of A^{-1}.
class CoeffTable {
public:
    CoeffTable(long d, long lo, long hi, long v0b, size_t m, std::vector<MatQ> mats)
        : d_(d), lo_(lo), hi_(hi), v0b_(v0b), m_(m), zero_(m, m), mats_(std::move(mats)) {}

    long d() const { return d_; }
    long lo() const { return lo_; }
    long hi() const { return hi_; }

    /// B_k(d). Indices above hi are an error; indices below lo are only
    /// served when they are provably zero (k < d*v0(A^{-1})).
    const MatQ& get(long k) const;

private:
    long d_, lo_, hi_, v0b_;
    size_t m_;
    MatQ zero_;
    std::vector<MatQ> mats_;  // index k - lo
};

/// B_k(d) for lo <= k <= hi; requires gcd(d, p) = 1.
CoeffTable b_coeffs(const MahlerSystem& sys, long d, long lo, long hi);

}  // namespace mahler
