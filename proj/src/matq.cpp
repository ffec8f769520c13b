#include "mahler/matq.hpp"

#include <stdexcept>

namespace mahler {

MatQ::MatQ(size_t rows, size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
}

MatQ MatQ::identity(size_t n) {
    MatQ m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool MatQ::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool MatQ::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

MatQ MatQ::operator-() const {
    MatQ r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    MatQ r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

MatQ operator-(const MatQ& a, const MatQ& b) { return a + (-b); }

MatQ operator*(const MatQ& a, const MatQ& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
    MatQ r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

MatQ MatQ::operator*(const Rational& s) const {
    MatQ r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

MatQ MatQ::transpose() const {
    MatQ r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

MatQ MatQ::col(size_t j) const {
    MatQ r(rows_, 1);
    for (size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

std::vector<Rational> MatQ::col_vec(size_t j) const {
    std::vector<Rational> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

MatQ MatQ::row_slice(size_t r0, size_t n) const {
    if (r0 + n > rows_) throw std::invalid_argument("row slice out of range");
    MatQ r(n, cols_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(r0 + i, j);
    return r;
}

MatQ MatQ::block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::invalid_argument("block out of range");
    MatQ r(nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void MatQ::set_block(size_t r0, size_t c0, const MatQ& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("block out of range");
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

MatQ MatQ::hcat(const MatQ& a, const MatQ& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
    MatQ r(a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

MatQ MatQ::vcat(const MatQ& a, const MatQ& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vcat col mismatch");
    MatQ r(a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

MatQ MatQ::from_cols(size_t ambient, const std::vector<std::vector<Rational>>& cols) {
    MatQ r(ambient, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != ambient) throw std::invalid_argument("column length mismatch");
        for (size_t i = 0; i < ambient; ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

std::vector<size_t> MatQ::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pr = row;
        while (pr < rows_ && at(pr, col).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
        Rational inv = Rational(1) / at(row, col);
        for (size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Rational f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t MatQ::rank() const {
    MatQ copy = *this;
    return copy.rref().size();
}

MatQ MatQ::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    MatQ aug = hcat(*this, identity(rows_));
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= rows_))
        throw std::domain_error("matrix not invertible");
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] != k) throw std::domain_error("matrix not invertible");
    MatQ r(rows_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j) r.at(i, j) = aug.at(i, rows_ + j);
    return r;
}

}  // namespace mahler
