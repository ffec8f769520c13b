#pragma once

#include "mahler/rational.hpp"

#include <vector>
#include <utility>
#include <string>

namespace mahler {

/// Dense univariate polynomial over Q in the variable z.
/// Coefficient i is the coefficient of z^i; the leading coefficient is
/// nonzero, and the zero polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { c_.push_back(c); trim(); }
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The monomial c * z^k.
    static Poly monomial(const Rational& c, size_t k);
    static Poly z() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    /// Index of the lowest nonzero coefficient; requires a nonzero polynomial.
    long valuation() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;
    /// Multiply by z^k.
    Poly shifted(size_t k) const;
    /// Divide by z^k; all coefficients below k must vanish.
    Poly unshifted(size_t k) const;
    /// Substitute z -> z^p.
    Poly compose_zp(long p) const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// 1 + max_k |p_k / p_h| over k < h = deg(f); strictly exceeds the modulus
/// of every complex root of f. Returns 1 for nonzero constants.
Rational lagrange_bound(const Poly& f);

/// Exact Lagrange interpolation through points with pairwise distinct
/// abscissae; the result has degree < number of points.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace mahler
