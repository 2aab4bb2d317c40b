#pragma once

#include <array>
#include <vector>

#include "abelint/form.hpp"
#include "abelint/petrov.hpp"
#include "abelint/picard_fuchs.hpp"

namespace abelint {

/// The Hamiltonian has a single nondegenerate maximum inside the triangle
/// {x > 0, y > 0, x + y < 1}, value 1/64 at (1/2, 1/4); ovals fill the
/// annulus 0 < t < 1/64 between that point and the triangle boundary.
inline constexpr double kOvalCenterX = 0.5;
inline constexpr double kOvalCenterY = 0.25;
inline constexpr double kTMax = 1.0 / 64.0;

double hamiltonian_value(double x, double y);
std::array<double, 2> hamiltonian_grad(double x, double y);

struct OracleConfig {
    double trace_tol = 1e-13;      ///< |H - t| at accepted contour points
    double quad_tol = 1e-12;       ///< relative target for contour integrals
    double quad_abs_floor = 1e-15; ///< convergence floor for near-zero values
    int max_quad_nodes = 1 << 20;  ///< per-integral node budget
    double ode_rel_tol = 1e-12;
    double ode_abs_tol = 1e-14;
    double ode_margin = 1e-4; ///< keep clear of the singular levels t = 0, 1/64
};

struct Oval {
    double t = 0;
    std::vector<double> theta;                 ///< ascending in [0, 2pi)
    std::vector<std::array<double, 2>> points; ///< (x, y) on the level set
};

/// Sample the oval at level t along n >= 64 radial rays from the center.
/// log H is strictly concave on the open triangle, so every ray crosses the
/// level set exactly once; each crossing is polished until |H - t| <= tol.
Oval trace_oval(double t, int n, const OracleConfig& cfg = {});

/// Double integral of x^k y^l over the region enclosed by the oval, computed
/// as the contour integral of x^{k+1} y^l dy / (k+1) counterclockwise.
/// Requires k >= -2 and k != -1; k = -1 goes through the dx representation
/// -x^{-1} y^{l+1} dx / (l+1) instead.  l >= 0.
double eval_monomial_integral(int k, int l, double t, const OracleConfig& cfg = {});

/// Several monomial integrals on shared contour points; one adaptive pass
/// converges the whole batch.
std::vector<double> eval_monomial_batch(const std::vector<MonomialIndex>& idxs,
                                        double t, const OracleConfig& cfg = {});

/// Contour integral of omega = p dx + q dy counterclockwise over the oval.
double eval_form_integral(const PolynomialForm& omega, double t,
                          const OracleConfig& cfg = {});

/// Basis vector (J1, J2, J3)(t) by quadrature on shared contour points.
std::array<double, 3> eval_J(double t, const OracleConfig& cfg = {});

/// Propagate the basis along D(t) J' = Q(t) J from (t0, j0) to t1 with an
/// adaptive high-order stepper.  All components must stay positive; both
/// endpoints must sit inside (margin, 1/64 - margin).
std::array<double, 3> integrate_pf(const PFSystem& pf, double t0,
                                   std::array<double, 3> j0, double t1,
                                   const OracleConfig& cfg = {});

/// Detects zeros of t -> p1(t) J1 + p2(t) J2 + p3(t) J3 on [t_lo, t_hi] by
/// sign changes over a fixed grid of propagated basis values, refined by
/// bisection.  Grid construction costs one quadrature seed plus a chain of
/// short propagations and is shared across many query vectors.  The result
/// is a lower bound on the true count: zeros of even local multiplicity or
/// closer together than the grid step can be missed, but reported zeros are
/// genuine up to propagation accuracy.
class ZeroFinder {
public:
    ZeroFinder(const PFSystem& pf, double t_lo, double t_hi, int grid_n,
               const OracleConfig& cfg = {});

    std::vector<double> zeros(const PetrovVector& v) const;
    double eval_integral(const PetrovVector& v, double t) const;

    const std::vector<double>& grid() const { return ts_; }
    const std::array<double, 3>& basis_at(int i) const { return js_[i]; }

private:
    PFSystem pf_;
    OracleConfig cfg_;
    std::vector<double> ts_;
    std::vector<std::array<double, 3>> js_;
};

/// One-shot convenience wrappers around ZeroFinder.
std::vector<double> count_zeros_numeric(const PFSystem& pf, const PetrovVector& v,
                                        double t_lo, double t_hi, int grid_n,
                                        const OracleConfig& cfg = {});
std::vector<double> count_zeros_numeric(ReductionEngine& eng, const PFSystem& pf,
                                        const PolynomialForm& omega, double t_lo,
                                        double t_hi, int grid_n,
                                        const OracleConfig& cfg = {});

} // namespace abelint
