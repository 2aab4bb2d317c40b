#pragma once

#include <map>
#include <optional>
#include <utility>

#include "abelint/rational.hpp"

namespace abelint {

/// Index of the basic integral built from x^k y^l.  Negative entries appear
/// only inside rewrite rules and the numeric oracle, never in input forms.
struct MonomialIndex {
    int k = 0, l = 0;
    friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
};

/// Sparse bivariate polynomial in (x, y) with rational coefficients.
class Poly2 {
public:
    using Terms = std::map<std::pair<int, int>, Rational>;

    Poly2() = default;
    static Poly2 monomial(int i, int j, const Rational& c);

    /// Accumulate c * x^i y^j; cancelling terms are erased.
    void add(int i, int j, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Max total degree i+j over nonzero terms, or nullopt for the zero polynomial.
    std::optional<int> total_degree() const;
    const Terms& terms() const { return terms_; }

    Poly2 dx() const;
    Poly2 dy() const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Rational& s);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

    double eval(double x, double y) const;

private:
    Terms terms_;
};

/// x^2 y (1 - x - y), the fixed cubic whose ovals carry all the integrals.
Poly2 hamiltonian();

/// One-form p dx + q dy with polynomial coefficients (exponents >= 0).
struct PolynomialForm {
    Poly2 p, q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    /// deg(omega) = max total degree over both coefficients; nullopt if zero.
    std::optional<int> degree() const;
    /// dq/dx - dp/dy, the double-integral density given counterclockwise
    /// orientation of the contour.
    Poly2 green_integrand() const;
};

} // namespace abelint
