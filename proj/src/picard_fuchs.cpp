#include "abelint/picard_fuchs.hpp"

#include <array>

#include "abelint/errors.hpp"

namespace abelint {

namespace {

// Minimal rational-function arithmetic over Q(t), just enough for a 3x3
// elimination.  Normal form: denominator monic, gcd(num, den) = 1, zero is
// 0/1.  Exactness everywhere; no pivot-growth concerns at this size.
struct RatFunc {
    Poly num, den{Poly(1)};

    static RatFunc of(Poly n, Poly d) {
        if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (n.is_zero()) return {};
        Poly g = Poly::gcd(n, d);
        n = Poly::div_exact(n, g);
        d = Poly::div_exact(d, g);
        Rational lead = d.leading();
        return {n * lead.inv(), d * lead.inv()};
    }

    bool is_zero() const { return num.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return of(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return of(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return of(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return of(a.num * b.den, a.den * b.num);
    }
};

// Solve M X = R over Q(t) by Gauss-Jordan with first-nonzero pivoting.
std::array<std::array<RatFunc, 3>, 3> solve_linear(const PolyMatrix& m, const PolyMatrix& r) {
    std::array<std::array<RatFunc, 6>, 3> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a[i][j] = RatFunc::of(m.at(i, j), Poly(1));
            a[i][j + 3] = RatFunc::of(r.at(i, j), Poly(1));
        }

    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int i = col; i < 3 && piv < 0; ++i)
            if (!a[i][col].is_zero()) piv = i;
        if (piv < 0) throw InternalError("derived system matrix is singular over Q(t)");
        std::swap(a[col], a[piv]);

        RatFunc inv = RatFunc::of(Poly(1), Poly(1)) / a[col][col];
        for (int j = col; j < 6; ++j) a[col][j] = a[col][j] * inv;
        for (int i = 0; i < 3; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            RatFunc f = a[i][col];
            for (int j = col; j < 6; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }

    std::array<std::array<RatFunc, 3>, 3> x;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) x[i][j] = a[i][j + 3];
    return x;
}

Poly lcm_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Poly::div_exact(a * b, Poly::gcd(a, b)).monic();
}

} // namespace

PFSystem derive_pf(ReductionEngine& eng) {
    // Differentiating the double integral of x^k y^l in t trades one power of
    // the Hamiltonian for a derivative: for l = 0,
    //   I_{k,0} = d/dt [ I_{k+2,1} - I_{k+3,1} - 2 I_{k+2,2} ].
    // Reducing the bracket for the three basis indices gives J = (M J)' with
    // M = A + t B.
    PolyMatrix m(3, 3);
    const std::array<int, 3> basis_k{0, 2, 3};
    for (int r = 0; r < 3; ++r) {
        int k = basis_k[r];
        PetrovVector g = eng.reduce_monomial(k + 2, 1);
        g -= eng.reduce_monomial(k + 3, 1);
        g -= Rational(2) * eng.reduce_monomial(k + 2, 2);
        m.at(r, 0) = g.p1;
        m.at(r, 1) = g.p2;
        m.at(r, 2) = g.p3;
        if (g.max_degree() > 1)
            throw InternalError("derivative bracket reduced to degree above one");
    }

    PFSystem pf;
    pf.A = PolyMatrix(3, 3);
    pf.B = PolyMatrix(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            pf.A.at(i, j) = Poly(m.at(i, j)[0]);
            pf.B.at(i, j) = Poly(m.at(i, j)[1]);
        }

    // J = B J + M J'  =>  M J' = (I - B) J.  Solve over Q(t), then clear the
    // common denominator, normalized to integer-coprime coefficients with a
    // positive leading term.
    auto x = solve_linear(m, PolyMatrix::identity(3) - pf.B);

    Poly d = Poly(1);
    for (const auto& row : x)
        for (const auto& e : row)
            if (!e.is_zero()) d = lcm_monic(d, e.den);
    normalize_primitive({&d});
    pf.D = d;

    pf.Q = PolyMatrix(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (x[i][j].is_zero()) continue;
            pf.Q.at(i, j) = x[i][j].num * Poly::div_exact(d, x[i][j].den);
            if (pf.Q.at(i, j).degree() > 1)
                throw InternalError("solved system entry exceeds degree one");
        }

    if (!(m * pf.Q == pf.D * (PolyMatrix::identity(3) - pf.B)))
        throw InternalError("solved system fails to reproduce the derivation identity");
    return pf;
}

TriangularSystem xyz_system(const PFSystem& pf) {
    if (!pf.Q.at(1, 0).is_zero() || !pf.Q.at(2, 0).is_zero())
        throw InternalError("solved system is not lower-triangular in the expected sense");
    if (!(Poly::monomial(1, Rational(2)) * pf.Q.at(0, 0) == pf.D))
        throw InternalError("sqrt(t) scaling identity 2 t Q11 = D fails");
    return TriangularSystem{pf.Q.at(0, 1), pf.Q.at(0, 2), pf.Q.at(1, 1),
                            pf.Q.at(1, 2), pf.Q.at(2, 1), pf.Q.at(2, 2)};
}

RiccatiW riccati_w(const PFSystem& pf) {
    TriangularSystem s = xyz_system(pf);
    // w = Y/Z:  D w' = (D Y' Z - Y D Z') / Z^2 = -z_y w^2 + (y_y - z_z) w + y_z.
    return RiccatiW{-s.z_y, s.y_y - s.z_z, s.y_z};
}

} // namespace abelint
