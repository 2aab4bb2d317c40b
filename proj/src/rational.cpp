#include "abelint/rational.hpp"

#include <ostream>

#include "abelint/errors.hpp"

namespace abelint {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw FormParseError("bad rational literal: '" + std::string(s) + "'"); };

    if (s.empty()) bad();
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.find('/') != std::string_view::npos) bad();
    }

    // mpz accepts leading whitespace and '0x' style prefixes; be stricter here.
    auto check_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) bad();
        size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') bad();
    };
    check_int(num, true);
    check_int(den, false);

    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw FormParseError("zero denominator in '" + std::string(s) + "'");

    Rational r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
}

} // namespace abelint
