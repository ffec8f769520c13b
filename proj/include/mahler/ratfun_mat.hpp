#pragma once

#include "mahler/matq.hpp"
#include "mahler/ratfun.hpp"

#include <vector>

namespace mahler {

/// Dense matrix of rational functions over Q(z).
class RatFunMat {
public:
    RatFunMat() : rows_(0), cols_(0) {}
    RatFunMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatFunMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RatFun& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const RatFun& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    friend RatFunMat operator+(const RatFunMat& a, const RatFunMat& b);
    friend RatFunMat operator-(const RatFunMat& a, const RatFunMat& b);
    friend RatFunMat operator*(const RatFunMat& a, const RatFunMat& b);
    friend bool operator==(const RatFunMat& a, const RatFunMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatFunMat& a, const RatFunMat& b) { return !(a == b); }

    /// Gauss-Jordan inverse over Q(z); throws std::domain_error
    /// ("matrix not invertible over Q(z)") when singular.
    RatFunMat inverse() const;
    RatFun det() const;

    /// Entrywise substitution z -> z^p.
    RatFunMat phi(long p) const;
    /// Exact evaluation at a point; throws on poles.
    MatQ eval(const Rational& x) const;

    /// Maximum entry degree (max of numerator/denominator degrees).
    long deg() const;

private:
    size_t rows_, cols_;
    std::vector<RatFun> a_;
};

/// Minimum valuation at 0 over the nonzero entries; undefined for the zero
/// matrix.
long v0_matrix(const RatFunMat& m);

}  // namespace mahler
