#include "mahler/ratfun_mat.hpp"

#include <stdexcept>

namespace mahler {

RatFunMat RatFunMat::identity(size_t n) {
    RatFunMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFun(1);
    return m;
}

bool RatFunMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatFunMat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

RatFunMat operator+(const RatFunMat& a, const RatFunMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    RatFunMat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

RatFunMat operator-(const RatFunMat& a, const RatFunMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    RatFunMat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

RatFunMat operator*(const RatFunMat& a, const RatFunMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
    RatFunMat r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const RatFun& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const RatFun& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) = r.at(i, j) + aik * bkj;
            }
        }
    return r;
}

namespace {

// Laplace determinant over the given row/column index sets. Intended for the
// small matrices this library works with; keeps every reduction on
// first-generation entries instead of Gauss-Jordan fraction churn.
RatFun laplace_det(const RatFunMat& m, const std::vector<size_t>& rows,
                   const std::vector<size_t>& cols) {
    const size_t n = rows.size();
    if (n == 0) return RatFun(1);
    if (n == 1) return m.at(rows[0], cols[0]);
    if (n == 2)
        return m.at(rows[0], cols[0]) * m.at(rows[1], cols[1]) -
               m.at(rows[0], cols[1]) * m.at(rows[1], cols[0]);
    RatFun acc;
    for (size_t k = 0; k < n; ++k) {
        const RatFun& pivot = m.at(rows[0], cols[k]);
        if (pivot.is_zero()) continue;
        std::vector<size_t> subrows(rows.begin() + 1, rows.end());
        std::vector<size_t> subcols;
        for (size_t j = 0; j < n; ++j)
            if (j != k) subcols.push_back(cols[j]);
        RatFun term = pivot * laplace_det(m, subrows, subcols);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<size_t> all_but(size_t n, size_t skip) {
    std::vector<size_t> v;
    for (size_t i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

}  // namespace

RatFunMat RatFunMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    if (rows_ <= 4) {
        // Adjugate route: inv_ij = (-1)^(i+j) det(minor_ji) / det.
        std::vector<size_t> all(rows_);
        for (size_t i = 0; i < rows_; ++i) all[i] = i;
        RatFun d = laplace_det(*this, all, all);
        if (d.is_zero()) throw std::domain_error("matrix not invertible over Q(z)");
        RatFunMat r(rows_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < rows_; ++j) {
                RatFun cof = laplace_det(*this, all_but(rows_, j), all_but(rows_, i));
                if ((i + j) % 2 == 1) cof = -cof;
                r.at(i, j) = cof / d;
            }
        return r;
    }
    RatFunMat work = *this;
    RatFunMat inv = identity(rows_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t pr = col;
        while (pr < rows_ && work.at(pr, col).is_zero()) ++pr;
        if (pr == rows_) throw std::domain_error("matrix not invertible over Q(z)");
        if (pr != col)
            for (size_t j = 0; j < cols_; ++j) {
                std::swap(work.at(pr, j), work.at(col, j));
                std::swap(inv.at(pr, j), inv.at(col, j));
            }
        RatFun pinv = work.at(col, col).inverse();
        for (size_t j = 0; j < cols_; ++j) {
            work.at(col, j) = work.at(col, j) * pinv;
            inv.at(col, j) = inv.at(col, j) * pinv;
        }
        for (size_t i = 0; i < rows_; ++i) {
            if (i == col || work.at(i, col).is_zero()) continue;
            RatFun f = work.at(i, col);
            for (size_t j = 0; j < cols_; ++j) {
                work.at(i, j) = work.at(i, j) - f * work.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatFun RatFunMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ <= 4) {
        std::vector<size_t> all(rows_);
        for (size_t i = 0; i < rows_; ++i) all[i] = i;
        return laplace_det(*this, all, all);
    }
    RatFunMat work = *this;
    RatFun d(1);
    for (size_t col = 0; col < cols_; ++col) {
        size_t pr = col;
        while (pr < rows_ && work.at(pr, col).is_zero()) ++pr;
        if (pr == rows_) return RatFun();
        if (pr != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(work.at(pr, j), work.at(col, j));
            d = -d;
        }
        d = d * work.at(col, col);
        RatFun pinv = work.at(col, col).inverse();
        for (size_t i = col + 1; i < rows_; ++i) {
            if (work.at(i, col).is_zero()) continue;
            RatFun f = work.at(i, col) * pinv;
            for (size_t j = col; j < cols_; ++j)
                work.at(i, j) = work.at(i, j) - f * work.at(col, j);
        }
    }
    return d;
}

RatFunMat RatFunMat::phi(long p) const {
    RatFunMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].compose_zp(p);
    return r;
}

MatQ RatFunMat::eval(const Rational& x) const {
    MatQ r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).eval(x);
    return r;
}

long RatFunMat::deg() const {
    long d = 0;
    for (const auto& x : a_)
        if (!x.is_zero()) d = std::max(d, x.deg());
    return d;
}

long v0_matrix(const RatFunMat& m) {
    bool seen = false;
    long v = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const RatFun& f = m.at(i, j);
            if (f.is_zero()) continue;
            long vf = valuation0(f);
            if (!seen || vf < v) v = vf;
            seen = true;
        }
    if (!seen) throw std::domain_error("valuation of zero matrix undefined");
    return v;
}

}  // namespace mahler
