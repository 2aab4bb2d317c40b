#include <doctest.h>

#include "abelint/poly_matrix.hpp"
#include "abelint/verify.hpp"

#include <array>
#include <stdexcept>

using namespace abelint;

namespace {

PolyMatrix random_matrix(Rng& rng, int rows, int cols) {
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, 1, 4);
    return m;
}

// Direct six-term expansion, independent of the cofactor routine.
Poly leibniz_det3(const PolyMatrix& m) {
    auto e = [&](int i, int j) { return m.at(i, j); };
    return e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) +
           e(0, 2) * e(1, 0) * e(2, 1) - e(0, 2) * e(1, 1) * e(2, 0) -
           e(0, 0) * e(1, 2) * e(2, 1) - e(0, 1) * e(1, 0) * e(2, 2);
}

}  // namespace

TEST_CASE("identity determinant") {
    CHECK(PolyMatrix::identity(3).det3() == Poly{Rational(1)});
}

TEST_CASE("cofactor determinant matches direct expansion") {
    Rng rng(5);
    for (int it = 0; it < 15; ++it) {
        const PolyMatrix m = random_matrix(rng, 3, 3);
        CHECK(m.det3() == leibniz_det3(m));
    }
}

TEST_CASE("product algebra") {
    Rng rng(9);
    const PolyMatrix a = random_matrix(rng, 3, 3);
    const PolyMatrix b = random_matrix(rng, 3, 3);
    const PolyMatrix c = random_matrix(rng, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * PolyMatrix::identity(3) == a);
    CHECK(PolyMatrix::identity(3) * a == a);
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("shape and bounds guards") {
    const PolyMatrix a(3, 3);
    const PolyMatrix wide(3, 4);
    CHECK_THROWS_AS(a + wide, std::invalid_argument);
    CHECK_THROWS_AS(wide * wide, std::invalid_argument);
    CHECK_THROWS_AS(a.at(5, 0), std::out_of_range);
    CHECK_THROWS_AS(wide.det3(), std::invalid_argument);
}

TEST_CASE("pointwise evaluation") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = Poly{Rational(1), Rational(64)};
    m.at(1, 1) = Poly::t();
    const Rational t(1, 128);
    CHECK(m.at(0, 0).eval(t) == Rational(3, 2));
    CHECK(m.at(1, 1).eval(t) == t);
    CHECK(m.at(0, 1).eval(t) == Rational(0));
}
