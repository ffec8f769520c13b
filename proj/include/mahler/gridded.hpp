#pragma once

#include "mahler/matq.hpp"
#include "mahler/subspace.hpp"

#include <vector>

namespace mahler {

/// Block matrix with m x m blocks whose nonzero blocks follow a residue-class
/// permutation sigma modulo d: block (i, j) may be nonzero only when
/// j = sigma(i mod d) (mod d). Only the allowed blocks are stored, packed
/// densely per residue class, so multiplication and kernels run on d
/// independent problems of size ~s/d.
class GriddedMat {
public:
    GriddedMat() = default;

    /// Detect sigma from the nonzero blocks of a dense matrix and pack it.
    /// Residue classes left unconstrained are completed to a permutation
    /// deterministically (identity-first); the all-zero matrix gets the
    /// identity. Throws std::domain_error("not gridded") when the nonzero
    /// blocks are incompatible with any single permutation.
    static GriddedMat from_dense(const MatQ& m, long d, size_t block_size);

    long d() const { return d_; }
    size_t block_size() const { return m_; }
    size_t block_rows() const { return brows_; }
    size_t block_cols() const { return bcols_; }
    size_t rows() const { return brows_ * m_; }
    size_t cols() const { return bcols_ * m_; }

    /// sigma as a permutation of {1..d}, matching the block numbering that
    /// starts at 1.
    std::vector<size_t> sigma_one_based() const;
    size_t sigma(size_t cls) const { return sigma_[cls]; }

    MatQ dense() const;

    /// Rows of the packed class matrix correspond to block rows congruent to
    /// cls, columns to block cols congruent to sigma(cls), both ascending.
    const MatQ& packed(size_t cls) const { return packed_[cls]; }

    friend GriddedMat gridded_mul(const GriddedMat& a, const GriddedMat& b);

private:
    long d_ = 1;
    size_t m_ = 0, brows_ = 0, bcols_ = 0;
    std::vector<size_t> sigma_;
    std::vector<MatQ> packed_;
};

/// Product of two gridded matrices; the resulting permutation is
/// sigma_b composed with sigma_a.
GriddedMat gridded_mul(const GriddedMat& a, const GriddedMat& b);

/// Kernel computed independently per residue class, then interleaved.
Subspace gridded_kernel(const GriddedMat& g);

}  // namespace mahler
