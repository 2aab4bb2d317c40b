#pragma once

#include <string>

#include "abelint/picard_fuchs.hpp"
#include "abelint/sturm.hpp"

namespace abelint {

/// Numerator pair of the derivative of I / (p1 sqrt(t)): clearing the common
/// denominator D p1^2 t sqrt(t) leaves
///   (I / (p1 sqrt(t)))' = (tp1 * J2 + tp2 * J3) / (D p1^2 t sqrt(t)).
/// When p1 == 0 the quotient step is skipped and the pair is just (p2, p3)
/// (flagged by `direct`), since I = p2 J2 + p3 J3 already lives downstairs.
/// Both variants are normalized to coprime integer coefficients by a positive
/// rational factor, so scaling the input form scales away entirely.
struct TildePair {
    Poly tp1, tp2;
    bool direct = false;
};

/// S = tp1 * w + tp2 with w = J2/J3 satisfies
///   D * tp1 * S' = A S^2 + B S + C.
/// Zeros of S are the zeros of the numerator above (J3 > 0 on the annulus),
/// and between consecutive ones C must vanish, which is what the counting
/// chain exploits.
struct RiccatiS {
    Poly A, B, C;
};

/// Everything the zero-count certificate records.  All counts are exact
/// (Sturm sequences over Q); the final bound is
///   instance_bound = s_zero_bound + l_intervals.
struct BoundCertificate {
    int n = 0; ///< degree of the input form
    PetrovVector petrov;
    TildePair tilde;
    RiccatiS riccati;

    bool zero_integral = false;  ///< petrov vector vanished; nothing to bound
    bool p1_zero = false;        ///< quotient step skipped
    bool tp1_zero = false;       ///< S degenerates to the polynomial tp2
    bool c_zero = false;         ///< C vanished identically (defensive flag)

    int k_intervals = 0;  ///< subintervals cut by roots of tp1, or 0 if unused
    int lambda_total = 0; ///< distinct roots of C in (0, 1/64)
    int s_zero_bound = 0; ///< bound on zeros of S in (0, 1/64)
    int l_intervals = 0;  ///< subintervals cut by roots of p1, or 0 if unused
    int instance_bound = 0;

    int worst_s_bound = 0;    ///< 3n/2 + 8, what s_zero_bound degenerates to
    int worst_case_bound = 0; ///< degree-only version of the chain
    Rational generic_bound;   ///< 7n/4 + 9

    /// "full", "direct-riccati", "polynomial-s" or "zero-integral".
    std::string chain() const;
};

/// Runs the counting chain.  Construction derives the whole differential
/// set-up once (system, triangular couplings, Riccati) from the engine.
class BoundEngine {
public:
    explicit BoundEngine(ReductionEngine& eng);

    const PFSystem& pf() const { return pf_; }
    const TriangularSystem& xyz() const { return xyz_; }
    const RiccatiW& riccati() const { return rw_; }

    /// Numerator pair for a nonzero coordinate vector.
    TildePair tilde_polys(const PetrovVector& v) const;

    /// Coefficients of the S-equation; requires tp1 != 0.
    RiccatiS riccati_s(const TildePair& tp) const;

    /// Certified zero-count bound for the integral of omega over the ovals,
    /// t in (0, 1/64).  Requires a nonzero form.
    BoundCertificate certificate(const PolynomialForm& omega);

    /// Degree-only bound 7n/4 + 9 valid for every form of degree n.
    static Rational generic_bound(int n);
    /// Bound (7n + 43)/4 covering limit cycles of the perturbed foliation,
    /// where the perturbation may shift which first integral is relevant.
    static Rational cycles_bound(int n);

private:
    ReductionEngine& eng_;
    PFSystem pf_;
    TriangularSystem xyz_;
    RiccatiW rw_;
    OpenInterval domain_;
};

} // namespace abelint
