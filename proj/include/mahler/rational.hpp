#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace mahler {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper around GMP's mpq_class; all arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts "a" or "a/b", optionally signed.
    static Rational from_string(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned long e) const;

    /// Largest integer <= value.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    /// Smallest integer >= value.
    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    std::string str() const;  // "num/den", or "num" when den == 1

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return n.get_si();
}

/// Floor and ceiling divisions on machine integers, exact for any signs,
/// b > 0.
inline long floor_div_l(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}
inline long ceil_div_l(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && r > 0) ? q + 1 : q;
}

}  // namespace mahler
