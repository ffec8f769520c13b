#include "mahler/companion.hpp"

#include <numeric>
#include <stdexcept>

namespace mahler {

Rational pick_z0(const MahlerSystem& sys) {
    Rational best(1);
    RatFun det = sys.A().det();
    if (!det.num().is_zero()) {
        Rational b = lagrange_bound(det.num());
        if (b > best) best = b;
    }
    for (size_t i = 0; i < sys.m(); ++i)
        for (size_t j = 0; j < sys.m(); ++j) {
            const RatFun& e = sys.A().at(i, j);
            if (e.is_zero()) continue;
            Rational b = lagrange_bound(e.den());
            if (b > best) best = b;
        }
    Int z0 = best.ceil();
    if (z0 < 2) z0 = 2;  // keep z0 off the unit circle
    return Rational(z0);
}

CompanionForm cyclic_gauge(const MahlerSystem& sys) {
    const size_t m = sys.m();
    const long p = sys.p();
    const Rational z0 = pick_z0(sys);

    // Evaluation points z0^(p^i), i = 0..m-1.
    std::vector<Rational> pts(m);
    Int pk(1);
    for (size_t i = 0; i < m; ++i) {
        pts[i] = z0.pow(pk.get_ui());
        pk *= p;
    }

    // Interpolation targets: t_0 = e_1, t_i = e_{i+1} A(z0)^{-1} ... A(z0^{p^{i-1}})^{-1}.
    std::vector<std::vector<Rational>> targets(m, std::vector<Rational>(m, Rational(0)));
    targets[0][0] = Rational(1);
    MatQ acc = MatQ::identity(m);
    for (size_t i = 1; i < m; ++i) {
        MatQ ainv_at;
        try {
            ainv_at = sys.A().eval(pts[i - 1]).inverse();
        } catch (const std::domain_error&) {
            throw std::logic_error("bad base point");
        }
        acc = acc * ainv_at;
        for (size_t j = 0; j < m; ++j) targets[i][j] = acc.at(i, j);
    }

    // Entrywise interpolation gives the cyclic row vector r of degree < m.
    RatFunMat row(1, m);
    for (size_t j = 0; j < m; ++j) {
        std::vector<std::pair<Rational, Rational>> data(m);
        for (size_t i = 0; i < m; ++i) data[i] = {pts[i], targets[i][j]};
        row.at(0, j) = RatFun(interpolate(data));
    }

    // Rows r_1 = r, r_{i+1} = phi_p(r_i) A.
    RatFunMat pmat(m, m);
    for (size_t j = 0; j < m; ++j) pmat.at(0, j) = row.at(0, j);
    for (size_t i = 1; i < m; ++i) {
        row = row.phi(p) * sys.A();
        for (size_t j = 0; j < m; ++j) pmat.at(i, j) = row.at(0, j);
    }

    if (pmat.eval(z0) != MatQ::identity(m)) throw std::logic_error("bad base point");

    RatFunMat qrow = row.phi(p) * sys.A() * pmat.inverse();
    std::vector<RatFun> q(m);
    for (size_t j = 0; j < m; ++j) q[j] = qrow.at(0, j);
    return CompanionForm{std::move(pmat), std::move(q), z0};
}

Hull lower_hull(std::vector<HullPoint> points) {
    if (points.empty()) throw std::invalid_argument("hull of empty point set");
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1].x < points[i].x))
            throw std::invalid_argument("hull abscissae must be strictly increasing");

    // Monotone chain, lower envelope only. A middle vertex survives exactly
    // when the slopes strictly increase through it.
    std::vector<HullPoint> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2) {
            const HullPoint& a = hull[hull.size() - 2];
            const HullPoint& b = hull[hull.size() - 1];
            Int cross = (b.x - a.x) * (pt.y - b.y) - (b.y - a.y) * (pt.x - b.x);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }

    Hull h;
    h.vertices = std::move(hull);
    for (size_t i = 1; i < h.vertices.size(); ++i)
        h.slopes.emplace_back(h.vertices[i].y - h.vertices[i - 1].y,
                              h.vertices[i].x - h.vertices[i - 1].x);
    return h;
}

HullResult ramification_index(const MahlerSystem& sys) {
    CompanionForm comp = cyclic_gauge(sys);
    const long p = sys.p();
    const size_t m = sys.m();

    std::vector<HullPoint> points;
    Int pi(1);
    for (size_t i = 0; i < m; ++i) {
        if (!comp.q[i].is_zero()) points.push_back({pi, Int(valuation0(comp.q[i]))});
        pi *= p;
    }
    points.push_back({pi, Int(0)});  // (p^m, 0)

    Hull hull = lower_hull(std::move(points));

    Int d(1);
    for (const Rational& s : hull.slopes) {
        Int den = s.den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t());
        if (g == 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }

    Int pm = pi;  // p^m
    Int gdp;
    mpz_gcd(gdp.get_mpz_t(), d.get_mpz_t(), Int(p).get_mpz_t());
    if (!(d >= 1 && d <= pm - 1 && gdp == 1))
        throw std::logic_error("ramification index escaped the admissible set");
    return HullResult{std::move(hull), to_long(d)};
}

RatFunMat companion_matrix(const std::vector<RatFun>& q) {
    const size_t m = q.size();
    RatFunMat c(m, m);
    for (size_t i = 0; i + 1 < m; ++i) c.at(i, i + 1) = RatFun(1);
    for (size_t j = 0; j < m; ++j) c.at(m - 1, j) = q[j];
    return c;
}

}  // namespace mahler
