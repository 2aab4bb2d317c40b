#pragma once

#include "abelint/poly.hpp"
#include "abelint/rational.hpp"

namespace abelint {

/// Open interval (lo, hi) with rational endpoints, lo < hi enforced.
struct OpenInterval {
    Rational lo, hi;
    OpenInterval(Rational l, Rational h);
};

/// Number of distinct real roots of p strictly inside (lo, hi).  Roots at the
/// endpoints are excluded; multiplicities are collapsed by taking the
/// square-free part first.  Throws ZeroPolynomialError on the zero polynomial.
int sturm_count(const Poly& p, const OpenInterval& iv);

} // namespace abelint
