#include "mahler/subspace.hpp"

#include <stdexcept>

namespace mahler {

Subspace Subspace::span(const MatQ& columns) {
    // The rows of columns^T span the same space; its RREF rows are the
    // canonical basis, transposed back into columns.
    MatQ t = columns.transpose();
    auto pivots = t.rref();
    Subspace s(columns.rows());
    MatQ b(columns.rows(), pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t i = 0; i < columns.rows(); ++i) b.at(i, k) = t.at(k, i);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(pivots);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
    std::vector<Rational> r = v;
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const Rational f = r[pivots_[k]];
        if (f.is_zero()) continue;
        for (size_t i = 0; i < ambient_; ++i) r[i] -= f * basis_.at(i, k);
    }
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

Subspace kernel(const MatQ& m) {
    MatQ r = m;
    auto pivots = r.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> cols;
    for (size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[fc] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, fc);
        cols.push_back(std::move(v));
    }
    return Subspace::span(MatQ::from_cols(m.cols(), cols));
}

Subspace image(const MatQ& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("dimension mismatch");
    return Subspace::span(m * s.basis());
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    if (s1.is_full()) return s2;
    if (s2.is_full()) return s1;
    if (s1.is_zero() || s2.is_zero()) return Subspace::zero(s1.ambient_dim());

    Subspace k = kernel(MatQ::hcat(s1.basis(), -s2.basis()));
    // A kernel vector (x, y) satisfies B1 x = B2 y; B1 x enumerates the
    // intersection as (x, y) runs over the kernel.
    MatQ coeff(s1.dim(), k.dim());
    for (size_t j = 0; j < k.dim(); ++j)
        for (size_t i = 0; i < s1.dim(); ++i) coeff.at(i, j) = k.basis().at(i, j);
    return Subspace::span(s1.basis() * coeff);
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    return Subspace::span(MatQ::hcat(s1.basis(), s2.basis()));
}

Subspace preimage(const MatQ& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    if (s.is_full()) return Subspace::full(m.cols());
    // x with Mx = By for some y: kernel of [M | -B], projected onto x.
    Subspace k = kernel(MatQ::hcat(m, -s.basis()));
    MatQ proj(m.cols(), k.dim());
    for (size_t j = 0; j < k.dim(); ++j)
        for (size_t i = 0; i < m.cols(); ++i) proj.at(i, j) = k.basis().at(i, j);
    return Subspace::span(proj);
}

MatQ solve_right(const MatQ& e, const MatQ& f) {
    if (e.rows() != f.rows()) throw std::invalid_argument("shape mismatch");
    const size_t k = e.cols();
    MatQ aug = MatQ::hcat(e, f);
    auto pivots = aug.rref();

    size_t rank_e = 0;
    for (size_t p : pivots)
        if (p < k) ++rank_e;
    if (rank_e < k) throw std::domain_error("basis not independent");
    for (size_t p : pivots)
        if (p >= k) throw std::domain_error("R does not exist");

    MatQ r(k, f.cols());
    for (size_t row = 0; row < k; ++row)
        for (size_t j = 0; j < f.cols(); ++j) r.at(row, j) = aug.at(row, k + j);
    if (e * r != f) throw std::domain_error("R does not exist");
    return r;
}

}  // namespace mahler
