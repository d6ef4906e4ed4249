#include "amalgam/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace amalgam {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    std::string s(text);
    for (char c : s) {
        if (c != '-' && c != '/' && (c < '0' || c > '9'))
            throw std::invalid_argument("rational: bad character in '" + s + "'");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::size_t Rational::digit_size() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 10) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 10);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

}  // namespace amalgam
