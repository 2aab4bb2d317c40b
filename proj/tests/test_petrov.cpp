#include <doctest.h>

#include "abelint/petrov.hpp"
#include "abelint/verify.hpp"

#include <stdexcept>

using namespace abelint;

namespace {

Poly2 random_poly2(Rng& rng, int max_deg) {
    Poly2 g;
    for (int i = 0; i <= max_deg; ++i)
        for (int j = 0; i + j <= max_deg; ++j)
            if (rng.chance(40)) g.add(i, j, Rational(rng.integer(-4, 4), rng.integer(1, 3)));
    return g;
}

}  // namespace

TEST_CASE("basis and low-order reductions") {
    ReductionEngine eng;
    CHECK(eng.reduce_monomial(0, 0) == PetrovVector{Poly{Rational(1)}, Poly{}, Poly{}});
    CHECK(eng.reduce_monomial(2, 0) == PetrovVector{Poly{}, Poly{Rational(1)}, Poly{}});
    CHECK(eng.reduce_monomial(3, 0) == PetrovVector{Poly{}, Poly{}, Poly{Rational(1)}});
    CHECK(eng.reduce_monomial(1, 0) == PetrovVector{Poly{}, Poly{Rational(2)}, Poly{}});
    CHECK(eng.reduce_monomial(1, 1) == PetrovVector{Poly{}, Poly{Rational(1, 2)}, Poly{}});
    CHECK(eng.reduce_monomial(2, 1) ==
          PetrovVector{Poly{}, Poly{Rational(1, 2)}, Poly{Rational(-1, 2)}});
    CHECK(eng.reduce_monomial(2, 2) ==
          PetrovVector{Poly{Rational(0), Rational(-1, 3)}, Poly{Rational(1, 6)},
                       Poly{Rational(-1, 6)}});
    CHECK(eng.reduce_monomial(5, 2) ==
          PetrovVector{Poly{}, Poly{Rational(5, 252), Rational(-4, 21)},
                       Poly{Rational(-5, 252), Rational(1, 9)}});
    CHECK_THROWS_AS(eng.reduce_monomial(-1, 0), std::invalid_argument);
}

TEST_CASE("relatively exact forms reduce to zero") {
    // omega = g dH + d r has integral identically zero over every oval; the
    // reduction must see that without any numeric help.
    ReductionEngine eng;
    const Poly2 h = hamiltonian();
    Rng rng(21);
    for (int it = 0; it < 8; ++it) {
        const Poly2 g = random_poly2(rng, 3);
        const Poly2 r = random_poly2(rng, 4);
        PolynomialForm omega{g * h.dx() + r.dx(), g * h.dy() + r.dy()};
        CHECK(eng.reduce_form(omega).is_zero());
    }
}

TEST_CASE("reduction is deterministic across engine instances") {
    ReductionEngine a, b;
    for (int k = 0; k + 0 <= 12; ++k)
        for (int l = 0; k + l <= 12; ++l) CHECK(a.reduce_monomial(k, l) == b.reduce_monomial(k, l));
}

TEST_CASE("coefficient degree stays below (k + l) / 4") {
    ReductionEngine eng;
    for (int k = 0; k <= 20; ++k)
        for (int l = 0; k + l <= 20; ++l)
            CHECK(eng.reduce_monomial(k, l).max_degree() <= (k + l) / 4);
}

TEST_CASE("form reduction examples") {
    ReductionEngine eng;
    PolynomialForm x2y_dy;  // density 2xy, and 2 I_{1,1} = J2
    x2y_dy.q.add(2, 1, Rational(1));
    const PetrovVector v = eng.reduce_form(x2y_dy);
    CHECK(v == PetrovVector{Poly{}, Poly{Rational(1)}, Poly{}});

    PolynomialForm y_dx;
    y_dx.p.add(0, 1, Rational(1));
    CHECK(eng.reduce_form(y_dx) == PetrovVector{Poly{Rational(-1)}, Poly{}, Poly{}});

    PolynomialForm dh{hamiltonian().dx(), hamiltonian().dy()};
    CHECK(eng.reduce_form(dh).is_zero());

    PolynomialForm neg;
    neg.p.add(-1, 0, Rational(1));
    CHECK_THROWS_AS(eng.reduce_form(neg), std::invalid_argument);
}

TEST_CASE("rewrite instances carry the published coefficients") {
    const RelationInstance r1 = relation_residual(Relation::R1, 0, 0);
    REQUIRE(r1.lhs.size() == 1);
    CHECK(r1.lhs[0].coeff == Poly::t());
    CHECK(r1.lhs[0].idx == MonomialIndex{0, 0});
    CHECK_FALSE(r1.lhs[0].derivative);
    REQUIRE(r1.rhs.size() == 3);
    auto coeff_at = [](const RelationInstance& r, int k, int l) {
        for (const auto& term : r.rhs)
            if (term.idx == MonomialIndex{k, l}) return term.coeff;
        return Poly{};
    };
    CHECK(coeff_at(r1, 2, 1) == Poly{Rational(3)});
    CHECK(coeff_at(r1, 3, 1) == Poly{Rational(-4)});
    CHECK(coeff_at(r1, 2, 2) == Poly{Rational(-3)});

    const RelationInstance r2 = relation_residual(Relation::R2, 0, 0);
    CHECK(coeff_at(r2, 2, 1) == Poly{Rational(2)});
    CHECK(coeff_at(r2, 3, 1) == Poly{Rational(-2)});
    CHECK(coeff_at(r2, 2, 2) == Poly{Rational(-3)});

    const RelationInstance r4 = relation_residual(Relation::R4, 0, 0);
    REQUIRE(r4.lhs.size() == 1);
    CHECK(r4.lhs[0].coeff == Poly{Rational(1)});
    for (const auto& term : r4.rhs) CHECK(term.derivative);
    CHECK(coeff_at(r4, 2, 1) == Poly{Rational(1)});
    CHECK(coeff_at(r4, 2, 2) == Poly{Rational(-2)});
    CHECK(coeff_at(r4, 3, 1) == Poly{Rational(-1)});
}
