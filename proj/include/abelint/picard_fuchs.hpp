#pragma once

#include "abelint/petrov.hpp"
#include "abelint/poly_matrix.hpp"

namespace abelint {

/// First-order system for the basis J = (J1, J2, J3):
///   J = d/dt [ (A + t B) J ]      (derivation form, A and B constant)
///   D(t) J' = Q(t) J              (solved form, deg Q <= 1)
/// D is the minimal integer-primitive denominator with positive leading
/// coefficient; it vanishes exactly at the endpoints t = 0, 1/64 of the
/// period annulus.
struct PFSystem {
    PolyMatrix A, B; ///< constant 3x3 matrices
    PolyMatrix Q;    ///< 3x3, entries of degree <= 1
    Poly D;
};

/// The solved system in the variables (X, Y, Z) = (t^{-1/2} J1, J2, J3):
///   D sqrt(t) X' = x_y Y + x_z Z
///   D Y'         = y_y Y + y_z Z
///   D Z'         = z_y Y + z_z Z
/// The X-equation loses its X term exactly when 2 t Q11 = D, and the last two
/// rows close on (Y, Z) exactly when Q21 = Q31 = 0; both facts are checked,
/// since the whole zero-counting reduction depends on them.
struct TriangularSystem {
    Poly x_y, x_z;
    Poly y_y, y_z;
    Poly z_y, z_z;
};

/// The ratio w = J2 / J3 satisfies D w' = a2 w^2 + a1 w + a0.
struct RiccatiW {
    Poly a2, a1, a0;
};

/// Derive the full system from scratch: reduce the six integrals behind the
/// derivative identities, assemble A + tB, and invert it over the rational
/// function field by Gaussian elimination.
PFSystem derive_pf(ReductionEngine& eng);

TriangularSystem xyz_system(const PFSystem& pf);
RiccatiW riccati_w(const PFSystem& pf);

} // namespace abelint
