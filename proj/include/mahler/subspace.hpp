#pragma once

#include "mahler/matq.hpp"

#include <vector>

namespace mahler {

/// Subspace of Q^n held as its unique reduced column-echelon basis: pivot
/// rows strictly increase column by column, pivot entries are 1, and pivot
/// rows vanish in every other basis column. Two Subspace values are equal
/// exactly when they denote the same space.
class Subspace {
public:
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

    /// Canonicalize the column span of the given matrix.
    static Subspace span(const MatQ& columns);
    static Subspace zero(size_t ambient) { return Subspace(ambient); }
    static Subspace full(size_t ambient) { return span(MatQ::identity(ambient)); }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.cols(); }
    const MatQ& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<Rational>& v) const;
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    size_t ambient_;
    MatQ basis_;
    std::vector<size_t> pivots_;
};

/// Right kernel {x : Mx = 0}.
Subspace kernel(const MatQ& m);

/// {Mx : x in s}; requires m.cols() == s.ambient_dim().
Subspace image(const MatQ& m, const Subspace& s);

/// Intersection, via the kernel of the juxtaposed basis matrix [B1 | -B2].
Subspace intersect(const Subspace& s1, const Subspace& s2);

/// Sum of subspaces (column concatenation).
Subspace subspace_sum(const Subspace& s1, const Subspace& s2);

/// Preimage {x : Mx in s}; requires m.rows() == s.ambient_dim().
Subspace preimage(const MatQ& m, const Subspace& s);

/// The unique R with E*R = F, for E of full column rank. Throws
/// std::domain_error("basis not independent") when E is rank-deficient and
/// std::domain_error("R does not exist") when no exact solution exists.
/// The result is re-verified against all rows of F exactly.
MatQ solve_right(const MatQ& e, const MatQ& f);

}  // namespace mahler
