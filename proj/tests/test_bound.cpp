#include <doctest.h>

#include "abelint/bound.hpp"
#include "abelint/verify.hpp"

#include <stdexcept>

using namespace abelint;

TEST_CASE("numerator pair for the basis vector J1") {
    ReductionEngine eng;
    BoundEngine be(eng);
    const TildePair tp = be.tilde_polys(PetrovVector{Poly{Rational(1)}, Poly{}, Poly{}});
    CHECK_FALSE(tp.direct);
    CHECK(tp.tp1 == Poly{Rational(0), Rational(9)});
    CHECK(tp.tp2 == Poly{Rational(0), Rational(-10)});
}

TEST_CASE("s-equation coefficients for the plain ratio") {
    ReductionEngine eng;
    BoundEngine be(eng);
    // S = w itself: tp = (1, 0) reproduces the w-equation.
    const RiccatiS rs = be.riccati_s(TildePair{Poly{Rational(1)}, Poly{}, false});
    CHECK(rs.A == Poly{Rational(-3, 2), Rational(24)});
    CHECK(rs.B == Poly{Rational(4), Rational(-32)});
    CHECK(rs.C == Poly{Rational(-5, 2)});
    CHECK_THROWS_AS(be.riccati_s(TildePair{Poly{}, Poly{Rational(1)}, true}),
                    std::invalid_argument);
}

TEST_CASE("degree-only bounds") {
    CHECK(BoundEngine::generic_bound(0) == Rational(9));
    CHECK(BoundEngine::generic_bound(4) == Rational(16));
    CHECK(BoundEngine::generic_bound(2) == Rational(25, 2));
    CHECK(BoundEngine::cycles_bound(3) == Rational(16));
    CHECK(BoundEngine::cycles_bound(0) == Rational(43, 4));
    for (int n = 0; n <= 100; ++n)
        CHECK(BoundEngine::cycles_bound(n) == BoundEngine::generic_bound(n + 1));
    CHECK_THROWS_AS(BoundEngine::generic_bound(-1), std::invalid_argument);
}

TEST_CASE("certificate for y dx") {
    ReductionEngine eng;
    BoundEngine be(eng);
    PolynomialForm omega;
    omega.p.add(0, 1, Rational(1));
    const BoundCertificate cert = be.certificate(omega);
    CHECK(cert.n == 1);
    CHECK(cert.chain() == "full");
    CHECK(cert.petrov.p1 == Poly{Rational(-1)});
    CHECK(cert.tilde.tp1 == Poly{Rational(0), Rational(9)});
    CHECK(cert.tilde.tp2 == Poly{Rational(0), Rational(-10)});
    CHECK(cert.worst_s_bound == 9);
    CHECK(cert.worst_case_bound == 10);
    CHECK(cert.instance_bound <= cert.worst_case_bound);
    CHECK(cert.generic_bound == Rational(43, 4));
}

TEST_CASE("certificate for x^2 y dy") {
    ReductionEngine eng;
    BoundEngine be(eng);
    PolynomialForm omega;
    omega.q.add(2, 1, Rational(1));
    const BoundCertificate cert = be.certificate(omega);
    CHECK(cert.chain() == "direct-riccati");
    CHECK(cert.p1_zero);
    CHECK(cert.petrov.p2 == Poly{Rational(1)});
    CHECK(cert.tilde.tp1 == Poly{Rational(1)});
    CHECK(cert.tilde.tp2 == Poly{});
    CHECK(cert.riccati.C == Poly{Rational(-5, 2)});
    CHECK(cert.k_intervals == 1);
    CHECK(cert.lambda_total == 0);
    CHECK(cert.s_zero_bound == 1);
    CHECK(cert.l_intervals == 0);
    CHECK(cert.instance_bound == 1);
    CHECK(cert.n == 3);
}

TEST_CASE("certificate degenerate cases") {
    ReductionEngine eng;
    BoundEngine be(eng);

    PolynomialForm dh{hamiltonian().dx(), hamiltonian().dy()};
    const BoundCertificate cert = be.certificate(dh);
    CHECK(cert.zero_integral);
    CHECK(cert.chain() == "zero-integral");
    CHECK(cert.instance_bound == 0);

    CHECK_THROWS_AS(be.certificate(PolynomialForm{}), std::invalid_argument);
}

TEST_CASE("certificate is invariant under scaling the form") {
    ReductionEngine eng;
    BoundEngine be(eng);
    Rng rng(17);
    for (int it = 0; it < 4; ++it) {
        const PolynomialForm omega = random_form(rng, 4);
        PolynomialForm scaled{omega.p * Rational(-7, 3), omega.q * Rational(-7, 3)};
        const BoundCertificate a = be.certificate(omega);
        const BoundCertificate b = be.certificate(scaled);
        CHECK(a.instance_bound == b.instance_bound);
        CHECK(a.tilde.tp1 == b.tilde.tp1);
        CHECK(a.tilde.tp2 == b.tilde.tp2);
        CHECK(a.k_intervals == b.k_intervals);
        CHECK(a.lambda_total == b.lambda_total);
        CHECK(a.l_intervals == b.l_intervals);
    }
}
