#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "abelint/form.hpp"
#include "abelint/poly.hpp"

namespace abelint {

/// Coordinates of an integral in the module basis (J1, J2, J3) =
/// (I_{0,0}, I_{2,0}, I_{3,0}) with polynomial coefficients:
///   I = p1(t) J1 + p2(t) J2 + p3(t) J3.
struct PetrovVector {
    Poly p1, p2, p3;

    bool is_zero() const { return p1.is_zero() && p2.is_zero() && p3.is_zero(); }
    int max_degree() const; ///< max over the three coefficients, -1 when zero

    PetrovVector& operator+=(const PetrovVector& o);
    PetrovVector& operator-=(const PetrovVector& o);
    friend PetrovVector operator+(PetrovVector a, const PetrovVector& b) { return a += b; }
    friend PetrovVector operator-(PetrovVector a, const PetrovVector& b) { return a -= b; }
    friend PetrovVector operator*(const Poly& s, const PetrovVector& v);
    friend PetrovVector operator*(const Rational& s, const PetrovVector& v);
    friend bool operator==(const PetrovVector& a, const PetrovVector& b);

    /// p1(t) j1 + p2(t) j2 + p3(t) j3 in double precision.
    double eval_double(double t, const std::array<double, 3>& j) const;
};

/// The four rewrite families tying neighbouring basic integrals together.
/// R1/R2 are algebraic (a factor of t appears on the left), R3/R4 relate an
/// integral to derivatives of higher ones.  All four are generated from the
/// monomials of the Hamiltonian, not hardcoded.
enum class Relation { R1, R2, R3, R4 };

struct RelationTerm {
    Poly coeff;
    MonomialIndex idx;
    bool derivative = false; ///< term refers to d/dt I_idx
};

/// A concrete instance "sum(lhs) = sum(rhs)" at anchor (k, l).  Consumed by
/// the numeric verification suite, which evaluates both sides on real ovals.
struct RelationInstance {
    Relation which;
    int k = 0, l = 0;
    std::vector<RelationTerm> lhs, rhs;
};

RelationInstance relation_residual(Relation which, int k, int l);

struct DegreeProfile {
    int form_degree = 0;
    std::optional<int> deg_p1, deg_p2, deg_p3; ///< nullopt for a zero coefficient
    int degree_bound = 0;                      ///< floor(form_degree / 4)
};

/// Rewrites basic integrals I_{k,l} (k, l >= 0) into the module basis by a
/// fixed recursion on k + l.  Results are memoized; the same index always
/// resolves through the same chain of rewrites, so output is deterministic.
class ReductionEngine {
public:
    /// Coordinates of I_{k,l}; requires k, l >= 0.
    PetrovVector reduce_monomial(int k, int l);

    /// Coordinates of the double integral of a polynomial density g(x, y).
    PetrovVector reduce_density(const Poly2& g);

    /// Coordinates of the contour integral of omega = p dx + q dy, via the
    /// Green integrand.  Coefficient degrees are bounded by deg(omega)/4.
    PetrovVector reduce_form(const PolynomialForm& omega);

    DegreeProfile degree_profile(const PolynomialForm& omega);

private:
    PetrovVector reduce_any(int k, int l);

    std::map<std::pair<int, int>, PetrovVector> memo_;
    std::recursive_mutex mu_;
};

} // namespace abelint
