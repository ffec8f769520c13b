#include "mahler/rational.hpp"

#include <ostream>

namespace mahler {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Rational Rational::pow(unsigned long e) const {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mahler
