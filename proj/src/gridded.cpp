#include "mahler/gridded.hpp"

#include <stdexcept>

namespace mahler {

namespace {

// Block indices (0-based) congruent to cls modulo d, ascending.
std::vector<size_t> class_members(size_t count, long d, size_t cls) {
    std::vector<size_t> v;
    for (size_t b = cls; b < count; b += static_cast<size_t>(d)) v.push_back(b);
    return v;
}

bool block_nonzero(const MatQ& m, size_t bi, size_t bj, size_t bs) {
    for (size_t i = 0; i < bs; ++i)
        for (size_t j = 0; j < bs; ++j)
            if (!m.at(bi * bs + i, bj * bs + j).is_zero()) return true;
    return false;
}

}  // namespace

GriddedMat GriddedMat::from_dense(const MatQ& m, long d, size_t block_size) {
    if (d < 1) throw std::invalid_argument("grid modulus must be positive");
    if (block_size == 0 || m.rows() % block_size != 0 || m.cols() % block_size != 0)
        throw std::invalid_argument("matrix shape not a multiple of the block size");

    GriddedMat g;
    g.d_ = d;
    g.m_ = block_size;
    g.brows_ = m.rows() / block_size;
    g.bcols_ = m.cols() / block_size;

    const size_t dd = static_cast<size_t>(d);
    constexpr size_t kUnset = static_cast<size_t>(-1);
    std::vector<size_t> sigma(dd, kUnset);
    for (size_t bi = 0; bi < g.brows_; ++bi)
        for (size_t bj = 0; bj < g.bcols_; ++bj) {
            if (!block_nonzero(m, bi, bj, block_size)) continue;
            size_t rc = bi % dd, cc = bj % dd;
            if (sigma[rc] == kUnset) sigma[rc] = cc;
            else if (sigma[rc] != cc) throw std::domain_error("not gridded");
        }
    // sigma must be injective on the constrained classes.
    std::vector<bool> used(dd, false);
    for (size_t r = 0; r < dd; ++r) {
        if (sigma[r] == kUnset) continue;
        if (used[sigma[r]]) throw std::domain_error("not gridded");
        used[sigma[r]] = true;
    }
    // Complete to a permutation: unconstrained classes take themselves when
    // free, otherwise the smallest unused target.
    for (size_t r = 0; r < dd; ++r) {
        if (sigma[r] != kUnset) continue;
        if (!used[r]) {
            sigma[r] = r;
            used[r] = true;
            continue;
        }
        for (size_t c = 0; c < dd; ++c)
            if (!used[c]) {
                sigma[r] = c;
                used[c] = true;
                break;
            }
    }
    g.sigma_ = std::move(sigma);

    g.packed_.reserve(dd);
    for (size_t r = 0; r < dd; ++r) {
        auto rowsb = class_members(g.brows_, d, r);
        auto colsb = class_members(g.bcols_, d, g.sigma_[r]);
        MatQ p(rowsb.size() * block_size, colsb.size() * block_size);
        for (size_t a = 0; a < rowsb.size(); ++a)
            for (size_t b = 0; b < colsb.size(); ++b)
                for (size_t i = 0; i < block_size; ++i)
                    for (size_t j = 0; j < block_size; ++j)
                        p.at(a * block_size + i, b * block_size + j) =
                            m.at(rowsb[a] * block_size + i, colsb[b] * block_size + j);
        g.packed_.push_back(std::move(p));
    }
    return g;
}

std::vector<size_t> GriddedMat::sigma_one_based() const {
    // Class of 1-based block k is (k-1) mod d; report sigma in that numbering.
    std::vector<size_t> s(sigma_.size());
    for (size_t k = 0; k < sigma_.size(); ++k) s[k] = sigma_[k] + 1;
    return s;
}

MatQ GriddedMat::dense() const {
    MatQ m(rows(), cols());
    const size_t dd = static_cast<size_t>(d_);
    for (size_t r = 0; r < dd; ++r) {
        auto rowsb = class_members(brows_, d_, r);
        auto colsb = class_members(bcols_, d_, sigma_[r]);
        const MatQ& p = packed_[r];
        for (size_t a = 0; a < rowsb.size(); ++a)
            for (size_t b = 0; b < colsb.size(); ++b)
                for (size_t i = 0; i < m_; ++i)
                    for (size_t j = 0; j < m_; ++j)
                        m.at(rowsb[a] * m_ + i, colsb[b] * m_ + j) = p.at(a * m_ + i, b * m_ + j);
    }
    return m;
}

GriddedMat gridded_mul(const GriddedMat& a, const GriddedMat& b) {
    if (a.d_ != b.d_ || a.m_ != b.m_) throw std::invalid_argument("grid mismatch");
    if (a.bcols_ != b.brows_) throw std::invalid_argument("shape mismatch");

    GriddedMat g;
    g.d_ = a.d_;
    g.m_ = a.m_;
    g.brows_ = a.brows_;
    g.bcols_ = b.bcols_;
    g.sigma_.resize(static_cast<size_t>(g.d_));
    for (size_t r = 0; r < g.sigma_.size(); ++r) g.sigma_[r] = b.sigma_[a.sigma_[r]];
    // Packed product: a's class r columns are b's class sigma_a(r) rows,
    // packed in the same ascending block order.
    g.packed_.reserve(g.sigma_.size());
    for (size_t r = 0; r < g.sigma_.size(); ++r)
        g.packed_.push_back(a.packed_[r] * b.packed_[a.sigma_[r]]);
    return g;
}

Subspace gridded_kernel(const GriddedMat& g) {
    const size_t dd = static_cast<size_t>(g.d());
    std::vector<std::vector<Rational>> cols;
    for (size_t c = 0; c < dd; ++c) {
        // Equations touching column class c live in the row class mapped to c.
        size_t r = 0;
        while (g.sigma(r) != c) ++r;
        auto colsb = class_members(g.block_cols(), g.d(), c);
        if (colsb.empty()) continue;
        Subspace k = kernel(g.packed(r));
        for (size_t j = 0; j < k.dim(); ++j) {
            std::vector<Rational> v(g.cols(), Rational(0));
            for (size_t b = 0; b < colsb.size(); ++b)
                for (size_t i = 0; i < g.block_size(); ++i)
                    v[colsb[b] * g.block_size() + i] = k.basis().at(b * g.block_size() + i, j);
            cols.push_back(std::move(v));
        }
    }
    return Subspace::span(MatQ::from_cols(g.cols(), cols));
}

}  // namespace mahler
