#include "mahler/puiseux.hpp"

#include <stdexcept>

namespace mahler {

void PuiseuxMatrix::set_coeff(long n, MatQ c) {
    if (c.rows() != m_ || c.cols() != m_) throw std::invalid_argument("coefficient size mismatch");
    if (c.is_zero()) c_.erase(n);
    else c_[n] = std::move(c);
}

const MatQ& PuiseuxMatrix::coeff(long n) const {
    auto it = c_.find(n);
    return it == c_.end() ? zero_ : it->second;
}

std::optional<long> PuiseuxMatrix::valuation() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
}

PuiseuxMatrix phi_p_puiseux(const PuiseuxMatrix& g, long p) {
    PuiseuxMatrix r(g.d(), g.m(), g.known_up_to() * p);
    for (const auto& [n, c] : g.coeffs()) r.set_coeff(n * p, c);
    return r;
}

long ResidualValuation::value() const {
    if (infinite_) throw std::logic_error("value of infinite residual valuation");
    return v_;
}

ResidualValuation verify_gauge(const MahlerSystem& sys, const PuiseuxMatrix& g,
                               const MatQ& lambda, long t) {
    const long d = g.d();
    const long p = sys.p();
    const size_t m = sys.m();
    if (lambda.rows() != m || lambda.cols() != m) throw std::invalid_argument("Lambda size mismatch");

    // Truncating G at index T leaves A*G determined up to index d*v0(A) + T
    // and phi_p(G)*Lambda up to p*T; beyond the min the tail could interfere.
    const long v0a = sys.v0A();
    const long hi = std::min(d * v0a + t, p * t);

    const auto gval = g.valuation();
    if (!gval) return ResidualValuation::infinity();
    const long glow = *gval;
    const long lo = std::min(d * v0a + glow, p * glow);
    if (lo > hi) return ResidualValuation::infinity();

    // Laurent coefficients of A over the z-window touched by [lo, hi].
    const long azlo = v0a;
    const long azhi = floor_div_l(hi - glow, d);
    std::vector<MatQ> acoeff;
    if (azhi >= azlo) {
        std::vector<std::vector<Rational>> series(m * m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                series[i * m + j] = laurent_coeffs(sys.A().at(i, j), azlo, azhi);
        acoeff.assign(static_cast<size_t>(azhi - azlo + 1), MatQ(m, m));
        for (long k = azlo; k <= azhi; ++k)
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j)
                    acoeff[static_cast<size_t>(k - azlo)].at(i, j) =
                        series[i * m + j][static_cast<size_t>(k - azlo)];
    }

    for (long n = lo; n <= hi; ++n) {
        // (A*G)_n = sum over d*k + l = n of A_k G_l.
        MatQ r(m, m);
        for (long k = azlo; k <= azhi; ++k) {
            const long l = n - d * k;
            if (l < glow || l > t) continue;
            const MatQ& gl = g.coeff(l);
            if (gl.is_zero()) continue;
            r = r + acoeff[static_cast<size_t>(k - azlo)] * gl;
        }
        // (phi_p(G)*Lambda)_n = G_{n/p} Lambda when p | n.
        if (n % p == 0) {
            const MatQ& gnp = g.coeff(n / p);
            if (!gnp.is_zero()) r = r - gnp * lambda;
        }
        if (!r.is_zero()) return ResidualValuation::finite(n);
    }
    return ResidualValuation::infinity();
}

}  // namespace mahler
