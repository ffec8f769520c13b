#pragma once

#include "mahler/rational.hpp"

#include <vector>
#include <cstddef>

namespace mahler {

/// Dense matrix over Q, row-major. Zero-sized dimensions are allowed so that
/// empty bases and empty residue classes fall out naturally.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    MatQ(size_t rows, size_t cols, std::vector<Rational> entries);

    static MatQ identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    MatQ operator-() const;
    friend MatQ operator+(const MatQ& a, const MatQ& b);
    friend MatQ operator-(const MatQ& a, const MatQ& b);
    friend MatQ operator*(const MatQ& a, const MatQ& b);
    MatQ operator*(const Rational& s) const;
    friend bool operator==(const MatQ& a, const MatQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatQ& a, const MatQ& b) { return !(a == b); }

    MatQ transpose() const;
    MatQ col(size_t j) const;
    std::vector<Rational> col_vec(size_t j) const;
    /// Rows [r0, r0+n) as an n x cols matrix.
    MatQ row_slice(size_t r0, size_t n) const;
    MatQ block(size_t r0, size_t c0, size_t nrows, size_t ncols) const;
    void set_block(size_t r0, size_t c0, const MatQ& b);
    static MatQ hcat(const MatQ& a, const MatQ& b);
    static MatQ vcat(const MatQ& a, const MatQ& b);
    static MatQ from_cols(size_t ambient, const std::vector<std::vector<Rational>>& cols);

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();
    size_t rank() const;
    /// Inverse of a square matrix; throws std::domain_error when singular.
    MatQ inverse() const;

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace mahler
