#include "mahler/mahler_system.hpp"

#include <numeric>
#include <stdexcept>

namespace mahler {

MahlerSystem::MahlerSystem(long p, RatFunMat a) : p_(p), m_(a.rows()), a_(std::move(a)) {
    if (p_ < 2) throw std::invalid_argument("Mahler exponent p must be at least 2");
    if (a_.rows() != a_.cols() || a_.rows() == 0) throw std::invalid_argument("A must be square");
    ainv_ = a_.inverse();
    v0a_ = v0_matrix(a_);
    v0ainv_ = v0_matrix(ainv_);
    if (v0a_ + v0ainv_ > 0) throw std::logic_error("v0(A) + v0(A^-1) must be <= 0");
}

const MatQ& CoeffTable::get(long k) const {
    if (k > hi_) throw std::logic_error("coefficient index above table window");
    if (k < lo_) {
        // Only provably-zero indices (below the valuation of B(d)) may be
        // served from outside the window.
        if (k >= v0b_) throw std::logic_error("coefficient index below table window");
        return zero_;
    }
    return mats_[static_cast<size_t>(k - lo_)];
}

CoeffTable b_coeffs(const MahlerSystem& sys, long d, long lo, long hi) {
    if (d < 1 || std::gcd(d, sys.p()) != 1)
        throw std::invalid_argument("ramification d must be positive and coprime to p");
    if (lo > hi) throw std::invalid_argument("b_coeffs: lo > hi");

    const size_t m = sys.m();
    // B_{dk}(d) = (A^{-1})_k: expand A^{-1} entrywise over the z-window.
    const long zlo = ceil_div_l(lo, d);
    const long zhi = floor_div_l(hi, d);

    std::vector<MatQ> mats(static_cast<size_t>(hi - lo + 1), MatQ(m, m));
    if (zlo <= zhi) {
        std::vector<std::vector<Rational>> series(m * m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                series[i * m + j] = laurent_coeffs(sys.Ainv().at(i, j), zlo, zhi);
        for (long k = zlo; k <= zhi; ++k) {
            long idx = k * d;
            if (idx < lo || idx > hi) continue;
            MatQ& b = mats[static_cast<size_t>(idx - lo)];
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) b.at(i, j) = series[i * m + j][static_cast<size_t>(k - zlo)];
        }
    }
    return CoeffTable(d, lo, hi, d * sys.v0Ainv(), m, std::move(mats));
}

}  // namespace mahler
