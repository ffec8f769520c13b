#include "mahler/regsing.hpp"

#include <numeric>
#include <stdexcept>

namespace mahler {

Bounds bounds(const MahlerSystem& sys, long d) {
    if (d < 1 || std::gcd(d, sys.p()) != 1)
        throw std::invalid_argument("ramification d must be positive and coprime to p");
    const long p = sys.p();
    Bounds b;
    b.d = d;
    b.nu = ceil_div_l(d * sys.v0A(), p - 1);
    b.mu = ceil_div_l(-d * sys.v0Ainv(), p - 1);
    b.c = static_cast<long>(sys.m()) * (b.mu - b.nu + 1);
    return b;
}

BlockPair build_MN(const MahlerSystem& sys, long d) {
    const Bounds b = bounds(sys, d);
    const long p = sys.p();
    const size_t m = sys.m();
    const long v0b = d * sys.v0Ainv();

    // Indices i - p*j with j in [nu, mu] and i covering both M's rows [nu, mu]
    // and N's rows [v0b + p*nu, nu - 1].
    const long lo = std::min(b.nu - p * b.mu, v0b + p * b.nu - p * b.mu);
    const long hi = b.mu - p * b.nu;
    CoeffTable table = b_coeffs(sys, d, std::min(lo, v0b), hi);

    const size_t w = static_cast<size_t>(b.mu - b.nu + 1);
    MatQ M(static_cast<size_t>(b.c), static_cast<size_t>(b.c));
    for (size_t bi = 0; bi < w; ++bi)
        for (size_t bj = 0; bj < w; ++bj) {
            const long i = b.nu + static_cast<long>(bi);
            const long j = b.nu + static_cast<long>(bj);
            M.set_block(bi * m, bj * m, table.get(i - p * j));
        }

    MatQ N;
    if (b.nu == b.mu) {
        N = MatQ(1, static_cast<size_t>(b.c));
    } else {
        const long row_lo = v0b + p * b.nu;
        const size_t nrows = static_cast<size_t>(b.nu - row_lo);
        N = MatQ(nrows * m, static_cast<size_t>(b.c));
        for (size_t bi = 0; bi < nrows; ++bi)
            for (size_t bj = 0; bj < w; ++bj) {
                const long i = row_lo + static_cast<long>(bi);
                const long j = b.nu + static_cast<long>(bj);
                N.set_block(bi * m, bj * m, table.get(i - p * j));
            }
    }
    return BlockPair{b, m, std::move(M), std::move(N)};
}

namespace {

// Image of a class-supported subspace under a gridded matrix. The canonical
// basis of a space assembled from per-class kernels has single-class columns;
// straddling columns fall back to the dense product.
Subspace gridded_image(const GriddedMat& g, const MatQ& dense_m, const Subspace& s) {
    const size_t bs = g.block_size();
    const size_t dd = static_cast<size_t>(g.d());
    std::vector<std::vector<Rational>> out;
    for (size_t jcol = 0; jcol < s.dim(); ++jcol) {
        std::vector<Rational> v = s.basis().col_vec(jcol);
        // Column class of the support, or fall back when mixed.
        size_t cls = dd;
        bool mixed = false;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            size_t c = (i / bs) % dd;
            if (cls == dd) cls = c;
            else if (cls != c) { mixed = true; break; }
        }
        if (mixed) return image(dense_m, s);
        if (cls == dd) continue;  // zero column cannot occur, but harmless
        // Row class r with sigma(r) = cls receives the image.
        size_t r = 0;
        while (g.sigma(r) != cls) ++r;
        // Pack v into class coordinates, multiply, scatter.
        std::vector<size_t> colsb, rowsb;
        for (size_t bcol = cls; bcol < g.block_cols(); bcol += dd) colsb.push_back(bcol);
        for (size_t brow = r; brow < g.block_rows(); brow += dd) rowsb.push_back(brow);
        MatQ packed_v(colsb.size() * bs, 1);
        for (size_t bidx = 0; bidx < colsb.size(); ++bidx)
            for (size_t i = 0; i < bs; ++i)
                packed_v.at(bidx * bs + i, 0) = v[colsb[bidx] * bs + i];
        MatQ w = g.packed(r) * packed_v;
        std::vector<Rational> res(g.rows(), Rational(0));
        for (size_t bidx = 0; bidx < rowsb.size(); ++bidx)
            for (size_t i = 0; i < bs; ++i) res[rowsb[bidx] * bs + i] = w.at(bidx * bs + i, 0);
        out.push_back(std::move(res));
    }
    return Subspace::span(MatQ::from_cols(g.rows(), out));
}

}  // namespace

Subspace compute_X(const BlockPair& pair, XPath path) {
    const long c = pair.bounds.c;
    const size_t ambient = static_cast<size_t>(c);
    const bool nu_eq_mu = pair.bounds.nu == pair.bounds.mu;

    bool use_gridded = false;
    GriddedMat gm, gn;
    if (path != XPath::Dense) {
        try {
            gm = GriddedMat::from_dense(pair.M, pair.bounds.d, pair.m);
            if (!nu_eq_mu) gn = GriddedMat::from_dense(pair.N, pair.bounds.d, pair.m);
            use_gridded = true;
        } catch (const std::domain_error&) {
            if (path == XPath::Gridded) throw;
        }
    }

    const Subspace kerN = nu_eq_mu ? Subspace::full(ambient)
                        : use_gridded ? gridded_kernel(gn)
                                      : kernel(pair.N);
    Subspace x = kerN;

    // Positive direction: M^n ker(N) as iterated images, capped at c. Once
    // the image sequence hits a fixed point (M s = s) every later term is
    // identical, so the direction has stabilized.
    Subspace s = kerN;
    for (long n = 1; n <= c && !x.is_zero(); ++n) {
        Subspace next = use_gridded ? gridded_image(gm, pair.M, s) : image(pair.M, s);
        const bool settled = next == s;
        s = std::move(next);
        x = intersect(x, s);
        if (settled) break;
    }

    // Negative direction: the chain J_n = ker(N) cap ... cap ker(N M^n).
    // A plateau of this chain persists forever, so it is a sound stop.
    if (!nu_eq_mu && !x.is_zero()) {
        Subspace j = kerN;
        if (use_gridded) {
            GriddedMat y = gn;
            for (long n = 1; n <= c && !j.is_zero(); ++n) {
                y = gridded_mul(y, gm);
                Subspace next = intersect(j, gridded_kernel(y));
                const bool settled = next == j;
                j = std::move(next);
                if (settled) break;
            }
        } else {
            MatQ y = pair.N;
            for (long n = 1; n <= c && !j.is_zero(); ++n) {
                y = y * pair.M;
                Subspace next = intersect(j, kernel(y));
                const bool settled = next == j;
                j = std::move(next);
                if (settled) break;
            }
        }
        x = intersect(x, j);
    }
    return x;
}

FixedDResult decide_fixed_d(const MahlerSystem& sys, long d,
                            const std::optional<MatQ>& basis_override, XPath path) {
    BlockPair pair = build_MN(sys, d);
    Subspace x = compute_X(pair, path);
    const size_t m = sys.m();

    Verdict v;
    v.d = d;
    v.bounds = pair.bounds;
    v.dimX = static_cast<long>(x.dim());
    v.X = x;

    if (x.dim() < m) return FixedDResult{std::move(v), std::nullopt};
    if (x.dim() > m) throw std::logic_error("dim X exceeds m, contradicting the dichotomy");

    MatQ e = x.basis();
    if (basis_override) {
        if (basis_override->rows() != x.ambient_dim() || basis_override->cols() != m ||
            Subspace::span(*basis_override) != x)
            throw std::invalid_argument("basis_override does not span X");
        e = *basis_override;
    }

    MatQ r = solve_right(e, pair.M * e);  // X is M-invariant and M restricted to X is injective
    MatQ lambda = r.inverse();

    GaugeSeries gs;
    gs.bounds = pair.bounds;
    gs.R = r;
    for (long n = pair.bounds.nu; n <= pair.bounds.mu; ++n)
        gs.E[n] = e.row_slice(static_cast<size_t>(n - pair.bounds.nu) * m, m);

    v.regular_singular = true;
    v.Lambda = std::move(lambda);
    v.R = std::move(r);
    return FixedDResult{std::move(v), std::move(gs)};
}

PuiseuxMatrix extend_gauge(const MahlerSystem& sys, const GaugeSeries& gs, long upto) {
    const Bounds& b = gs.bounds;
    const long p = sys.p();
    const long v0b = b.d * sys.v0Ainv();
    const MatQ rinv = gs.R.inverse();

    std::map<long, MatQ> e = gs.E;
    if (upto > b.mu) {
        CoeffTable table = b_coeffs(sys, b.d, v0b, upto - p * b.nu);
        for (long n = b.mu + 1; n <= upto; ++n) {
            // Only l < n contribute here: k >= v0(B(d)) forces l <= (n - v0b)/p < n.
            MatQ acc(sys.m(), sys.m());
            const long lmax = floor_div_l(n - v0b, p);
            for (long l = b.nu; l <= lmax; ++l) {
                auto it = e.find(l);
                if (it == e.end() || it->second.is_zero()) continue;
                const MatQ& bk = table.get(n - p * l);
                if (!bk.is_zero()) acc = acc + bk * it->second;
            }
            e[n] = acc * rinv;
        }
    }

    PuiseuxMatrix g(b.d, sys.m(), upto);
    for (auto& [n, c] : e)
        if (n <= upto) g.set_coeff(n, std::move(c));
    return g;
}

std::vector<long> admissible_d(const MahlerSystem& sys) {
    Int pm(1);
    for (size_t i = 0; i < sys.m(); ++i) pm *= sys.p();
    const long limit = to_long(pm - 1);
    std::vector<long> ds;
    for (long d = 1; d <= limit; ++d)
        if (std::gcd(d, sys.p()) == 1) ds.push_back(d);
    return ds;
}

Verdict decide(const MahlerSystem& sys, long truncation_order, bool scan_all_d, XPath path) {
    if (truncation_order < 0) throw std::invalid_argument("truncation order must be >= 0");

    FixedDResult res{Verdict{}, std::nullopt};
    if (scan_all_d) {
        bool found = false;
        for (long d : admissible_d(sys)) {
            FixedDResult cand = decide_fixed_d(sys, d, std::nullopt, path);
            if (cand.verdict.regular_singular) {
                res = std::move(cand);
                found = true;
                break;
            }
            // Keep the most informative failure: the largest dim X seen.
            if (!found && cand.verdict.dimX >= res.verdict.dimX) res = std::move(cand);
        }
    } else {
        const long d = ramification_index(sys).d;
        res = decide_fixed_d(sys, d, std::nullopt, path);
    }

    if (!res.verdict.regular_singular) return std::move(res.verdict);

    const Bounds& b = res.verdict.bounds;
    const long t = std::max(b.mu + 1, b.d * truncation_order);
    PuiseuxMatrix gauge = extend_gauge(sys, *res.series, t);
    ResidualValuation rv = verify_gauge(sys, gauge, *res.verdict.Lambda, t);
    if (!rv.at_least(b.d * sys.v0A() + t + 1))
        throw std::logic_error("gauge residual violates the truncation contract");
    res.verdict.gauge = std::move(gauge);
    res.verdict.residual = rv;
    return std::move(res.verdict);
}

}  // namespace mahler
