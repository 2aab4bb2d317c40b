#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "abelint/rational.hpp"

namespace abelint {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree with trailing zeros trimmed.  The zero polynomial is the
/// empty coefficient list and reports degree() == -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);
    Poly(long constant) : Poly(Rational(constant)) {}
    Poly(std::initializer_list<Rational> ascending);

    static Poly from_coeffs(std::vector<Rational> ascending);
    static Poly monomial(int power, const Rational& coeff);
    static Poly t() { return monomial(1, Rational(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of t^i; zero outside the stored range.
    const Rational& operator[](int i) const;
    const Rational& leading() const; ///< throws on the zero polynomial
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    std::vector<double> double_coeffs() const;

    /// Euclidean division: returns {quotient, remainder}, b nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws InternalError if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    /// Monic gcd (gcd(0,0) == 0).
    static Poly gcd(const Poly& a, const Poly& b);
    /// p with all repeated factors collapsed to multiplicity one; monic scaling
    /// is not applied, the result keeps the sign of p's leading coefficient.
    Poly squarefree_part() const;

    Poly monic() const; ///< throws on the zero polynomial

    /// Human-readable form such as "64t^2 - t" (for logs and error text).
    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Divide out the joint content of a list of polynomials: after the call the
/// integer coefficients of the concatenated list are coprime, denominators are
/// cleared, and the overall scaling factor applied was positive.  No-op when
/// every polynomial is zero.
void normalize_primitive(std::vector<Poly*> ps);

} // namespace abelint
