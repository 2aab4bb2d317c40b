#include <doctest.h>

#include "abelint/errors.hpp"
#include "abelint/poly.hpp"
#include "abelint/verify.hpp"

using namespace abelint;

TEST_CASE("rational construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(7, 7).is_integer());
    CHECK(Rational(-5, 3).sign() == -1);
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing is strict") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), FormParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), FormParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), FormParseError);
    CHECK_THROWS_AS(Rational::parse(""), FormParseError);
    CHECK_THROWS_AS(Rational::parse("2/3x"), FormParseError);
    CHECK_THROWS_AS(Rational::parse("2/"), FormParseError);
}

TEST_CASE("joint content extraction") {
    CHECK(Rational::content_gcd(Rational(2, 3), Rational(4, 9)) == Rational(2, 9));
    CHECK(Rational::content_gcd(Rational(-6), Rational(4)) == Rational(2));
}

TEST_CASE("level polynomial fixtures") {
    const Poly d{Rational(0), Rational(-1), Rational(64)};
    CHECK(d.derivative() == Poly{Rational(-1), Rational(128)});
    CHECK(Poly::t() * Poly{Rational(-1), Rational(64)} == d);
    CHECK(d.eval(Rational(1, 64)) == Rational(0));
    CHECK(d.eval(Rational(0)) == Rational(0));
    CHECK(d.degree() == 2);
    CHECK(Poly{}.degree() == -1);
    CHECK(d[5] == Rational(0));
}

TEST_CASE("ring identities on random polynomials") {
    Rng rng(7);
    for (int it = 0; it < 25; ++it) {
        const Poly a = random_poly(rng, 6, 9);
        const Poly b = random_poly(rng, 5, 9);
        const Poly c = random_poly(rng, 4, 9);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        const auto [q, r] = Poly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("exact division guards") {
    const Poly g{Rational(-1, 128), Rational(1)};
    const Poly quot{Rational(3), Rational(0), Rational(2)};
    CHECK(Poly::div_exact(g * quot, g) == quot);
    CHECK_THROWS_AS(Poly::div_exact(g * quot + Poly{Rational(1)}, g), InternalError);
}

TEST_CASE("gcd keeps common factors, squarefree collapses powers") {
    const Poly g{Rational(-1, 128), Rational(1)};
    Rng rng(11);
    for (int it = 0; it < 10; ++it) {
        const Poly a = random_poly(rng, 4, 5) * g;
        const Poly b = random_poly(rng, 3, 5) * g;
        CHECK(Poly::divmod(Poly::gcd(a, b), g).second.is_zero());
    }
    const Poly sq = g * g * Poly{Rational(2), Rational(1)};
    const Poly sf = sq.squarefree_part();
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rational(1, 128)) == Rational(0));
    CHECK(sf.eval(Rational(-2)) == Rational(0));
}

TEST_CASE("joint primitive normalization") {
    Poly a{Rational(3, 2), Rational(9, 4)};
    Poly b{Rational(0), Rational(0), Rational(3, 8)};
    normalize_primitive({&a, &b});
    CHECK(a == Poly{Rational(4), Rational(6)});
    CHECK(b == Poly{Rational(0), Rational(0), Rational(1)});

    Poly c{Rational(-2)};
    normalize_primitive({&c});
    CHECK(c == Poly{Rational(-1)});

    Poly z;
    normalize_primitive({&z});
    CHECK(z.is_zero());
}
