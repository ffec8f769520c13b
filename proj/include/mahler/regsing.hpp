#pragma once

#include "mahler/companion.hpp"
#include "mahler/gridded.hpp"
#include "mahler/puiseux.hpp"
#include "mahler/subspace.hpp"

#include <map>
#include <optional>

namespace mahler {

/// The index window of the coefficient recurrence at ramification d.
struct Bounds {
    long d;
    long nu;  // ceil(d v0(A) / (p-1))
    long mu;  // ceil(-d v0(A^-1) / (p-1))
    long c;   // m (mu - nu + 1)
};

/// The block matrices M_d (square, c x c) and N_d (the constraints below
/// nu_d; a single zero row when nu_d = mu_d).
struct BlockPair {
    Bounds bounds;
    size_t m;
    MatQ M;
    MatQ N;
};

/// Outcome of the decision procedure. Lambda, R, gauge and residual are
/// present exactly on positive verdicts that ran the gauge extension.
struct Verdict {
    bool regular_singular = false;
    long d = 1;
    long dimX = 0;
    Bounds bounds{1, 0, 0, 0};
    Subspace X{0};
    std::optional<MatQ> Lambda;
    std::optional<MatQ> R;
    std::optional<PuiseuxMatrix> gauge;
    std::optional<ResidualValuation> residual;
};

/// Seed of the gauge series: R with M E = E R and the blocks E_nu..E_mu of
/// the chosen basis of X, keyed by index.
struct GaugeSeries {
    Bounds bounds;
    MatQ R;
    std::map<long, MatQ> E;
};

enum class XPath { Auto, Dense, Gridded };

Bounds bounds(const MahlerSystem& sys, long d);

/// Fills M_d and N_d from the Laurent coefficients of phi_d(A)^{-1}.
BlockPair build_MN(const MahlerSystem& sys, long d);

/// X_d = intersection over |n| <= c_d of M^n ker(N); negative powers as
/// ker(N M^|n|), positive powers as iterated images. Each direction stops
/// early once two consecutive intersections agree, and is capped at c_d.
Subspace compute_X(const BlockPair& pair, XPath path = XPath::Auto);

/// Runs the fixed-d test. On dim X = m it picks a basis (the canonical one,
/// or basis_override after checking it spans X), solves M E = E R, and
/// returns Lambda = R^{-1} together with the seed blocks.
struct FixedDResult {
    Verdict verdict;
    std::optional<GaugeSeries> series;
};
FixedDResult decide_fixed_d(const MahlerSystem& sys, long d,
                            const std::optional<MatQ>& basis_override = std::nullopt,
                            XPath path = XPath::Auto);

/// Extends the gauge series by the coefficient recurrence
/// E_n = (sum_{k + p l = n} B_k(d) E_l) R^{-1} for mu_d < n <= upto and
/// returns Gamma = sum E_n z^(n/d).
PuiseuxMatrix extend_gauge(const MahlerSystem& sys, const GaugeSeries& gs, long upto);

/// Full decision procedure. Default path: d from ramification_index, one
/// fixed-d run, gauge extension to max(mu_d + 1, d * truncation_order), and
/// the residual check. scan_all_d tries every admissible d in increasing
/// order instead; the first positive verdict wins.
Verdict decide(const MahlerSystem& sys, long truncation_order, bool scan_all_d = false,
               XPath path = XPath::Auto);

/// The admissible ramifications {1 <= d <= p^m - 1LL : gcd(d, p) = 1}.
std::vector<long> admissible_d(const MahlerSystem& sys);

}  // namespace mahler
