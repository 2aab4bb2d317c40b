#include <doctest.h>

#include "abelint/errors.hpp"
#include "abelint/oracle.hpp"

#include <cmath>
#include <stdexcept>

using namespace abelint;
using doctest::Approx;

TEST_CASE("critical point of the level function") {
    CHECK(hamiltonian_value(kOvalCenterX, kOvalCenterY) == kTMax);
    const auto g = hamiltonian_grad(kOvalCenterX, kOvalCenterY);
    CHECK(g[0] == 0.0);
    CHECK(g[1] == 0.0);
    CHECK(hamiltonian_value(0.25, 0.25) == Approx(0.25 * 0.25 * 0.25 * 0.5));
}

TEST_CASE("oval tracing") {
    const Oval oval = trace_oval(1.0 / 128.0, 128);
    REQUIRE(oval.points.size() == 128);
    for (const auto& pt : oval.points) {
        CHECK(std::abs(hamiltonian_value(pt[0], pt[1]) - oval.t) <= 1e-13);
        CHECK(pt[0] > 0.0);
        CHECK(pt[1] > 0.0);
        CHECK(pt[0] + pt[1] < 1.0);
    }
    CHECK_THROWS_AS(trace_oval(0.02, 128), std::invalid_argument);
    CHECK_THROWS_AS(trace_oval(1.0 / 128.0, 32), std::invalid_argument);
}

TEST_CASE("quadrature agrees across equivalent contour representations") {
    const double t = 1.0 / 128.0;

    // I_{1,1} via the canonical dy-form and via p dx with p = -x y^2 / 2.
    const double via_dy = eval_monomial_integral(1, 1, t);
    PolynomialForm dx_form;
    dx_form.p.add(1, 2, Rational(-1, 2));
    const double via_dx = eval_form_integral(dx_form, t);
    CHECK(via_dx == Approx(via_dy).epsilon(1e-10));

    // Antiderivative in y of 1: contour integral of y dx is minus the area.
    PolynomialForm y_dx;
    y_dx.p.add(0, 1, Rational(1));
    const double area = eval_monomial_integral(0, 0, t);
    CHECK(eval_form_integral(y_dx, t) == Approx(-area).epsilon(1e-10));

    // A full differential integrates to zero.
    PolynomialForm dh{hamiltonian().dx(), hamiltonian().dy()};
    CHECK(std::abs(eval_form_integral(dh, t)) <= 1e-10);
}

TEST_CASE("negative powers feed the rewrite rules") {
    // The l-direction rewrite anchored at (-1, 0) reads
    //   t I_{-1,0} = 2 I_{1,1} - 2 I_{2,1} - 3 I_{1,2},
    // which exercises the dx representation the oracle uses for k = -1.
    const double t = 1.0 / 128.0;
    const double lhs = t * eval_monomial_integral(-1, 0, t);
    const double rhs = 2.0 * eval_monomial_integral(1, 1, t) -
                       2.0 * eval_monomial_integral(2, 1, t) -
                       3.0 * eval_monomial_integral(1, 2, t);
    CHECK(lhs == Approx(rhs).epsilon(1e-9));
}

TEST_CASE("basis propagation along the differential system") {
    ReductionEngine eng;
    const PFSystem pf = derive_pf(eng);
    const double t0 = 1.0 / 128.0;
    const auto j0 = eval_J(t0);
    CHECK(j0[0] > 0.0);
    CHECK(j0[1] > 0.0);
    CHECK(j0[2] > 0.0);

    const auto same = integrate_pf(pf, t0, j0, t0);
    CHECK(same[0] == j0[0]);
    CHECK(same[1] == j0[1]);
    CHECK(same[2] == j0[2]);

    CHECK_THROWS_AS(integrate_pf(pf, t0, j0, kTMax - 1e-6), std::invalid_argument);

    const auto there = integrate_pf(pf, t0, j0, 1.0 / 100.0);
    const auto back = integrate_pf(pf, 1.0 / 100.0, there, t0);
    for (int c = 0; c < 3; ++c) CHECK(back[c] == Approx(j0[c]).epsilon(1e-9));
}

TEST_CASE("zero detection on the grid") {
    ReductionEngine eng;
    const PFSystem pf = derive_pf(eng);
    const ZeroFinder finder(pf, 1.0 / 200.0, 0.0155, 120);

    // J2 > 0 throughout, so no zeros.
    CHECK(finder.zeros(PetrovVector{Poly{}, Poly{Rational(1)}, Poly{}}).empty());

    // Plant a crossing of J2 - c J3 at t ~ 1/128 by pinning c near w(1/128).
    const double t0 = 1.0 / 128.0;
    const auto j0 = eval_J(t0);
    const double w = j0[1] / j0[2];
    const Rational c(std::llround(w * 1048576.0), 1048576);
    const PetrovVector v{Poly{}, Poly{Rational(1)}, Poly{-c}};
    const auto zs = finder.zeros(v);
    REQUIRE_FALSE(zs.empty());
    double best = 1.0;
    for (double z : zs) best = std::min(best, std::abs(z - t0));
    CHECK(best <= 1e-4);
}
