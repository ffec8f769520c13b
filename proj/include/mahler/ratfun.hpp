#pragma once

#include "mahler/poly.hpp"

#include <string>
#include <vector>

namespace mahler {

/// Rational function over Q in z, kept reduced: gcd(num, den) = 1 and the
/// denominator is monic. Zero is 0/1.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFun(long c) : RatFun(Rational(c)) {}
    RatFun(const Poly& num) : num_(num), den_(Rational(1)) {}
    RatFun(const Poly& num, const Poly& den);

    static RatFun z() { return RatFun(Poly::z()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// max(deg num, deg den).
    long deg() const { return std::max(num_.degree(), den_.degree()); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const;
    Rational eval(const Rational& x) const;
    /// Substitute z -> z^p.
    RatFun compose_zp(long p) const { return is_zero() ? RatFun() : RatFun(num_.compose_zp(p), den_.compose_zp(p)); }

    std::string str() const;

private:
    Poly num_, den_;
};

/// Valuation at z = 0: v0(num) - v0(den). Undefined for the zero function.
long valuation0(const RatFun& f);

/// Coefficients c_lo..c_hi of the Laurent expansion of f at 0. The zero
/// function yields zeros. Computed by writing f = z^v * N/D with
/// N(0), D(0) != 0 and running the linear recurrence induced by D.
std::vector<Rational> laurent_coeffs(const RatFun& f, long lo, long hi);

}  // namespace mahler
