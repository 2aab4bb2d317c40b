#include "abelint/petrov.hpp"

#include <algorithm>
#include <sstream>

#include "abelint/errors.hpp"

namespace abelint {

int PetrovVector::max_degree() const {
    return std::max({p1.degree(), p2.degree(), p3.degree()});
}

PetrovVector& PetrovVector::operator+=(const PetrovVector& o) {
    p1 += o.p1;
    p2 += o.p2;
    p3 += o.p3;
    return *this;
}

PetrovVector& PetrovVector::operator-=(const PetrovVector& o) {
    p1 -= o.p1;
    p2 -= o.p2;
    p3 -= o.p3;
    return *this;
}

PetrovVector operator*(const Poly& s, const PetrovVector& v) {
    return {s * v.p1, s * v.p2, s * v.p3};
}

PetrovVector operator*(const Rational& s, const PetrovVector& v) {
    return {v.p1 * s, v.p2 * s, v.p3 * s};
}

bool operator==(const PetrovVector& a, const PetrovVector& b) {
    return a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3;
}

double PetrovVector::eval_double(double t, const std::array<double, 3>& j) const {
    return p1.eval_double(t) * j[0] + p2.eval_double(t) * j[1] + p3.eval_double(t) * j[2];
}

namespace {

// Every rewrite lives on a fixed four-slot "frame" anchored at (a, b):
//   F0 = (a, b)   F1 = (a+2, b+1)   F2 = (a+3, b+1)   F3 = (a+2, b+2)
// because multiplying x^a y^b by the Hamiltonian only produces those three
// shifted indices.  A Row is an identity sum_i row[i] * I_{Fi} = 0.
using Row = std::array<Poly, 4>;

std::array<MonomialIndex, 4> frame(int a, int b) {
    return {MonomialIndex{a, b}, {a + 2, b + 1}, {a + 3, b + 1}, {a + 2, b + 2}};
}

int frame_slot(int di, int dj) {
    if (di == 2 && dj == 1) return 1;
    if (di == 3 && dj == 1) return 2;
    if (di == 2 && dj == 2) return 3;
    throw InternalError("Hamiltonian monomial outside the expected frame");
}

// t (a+1) I_{a,b} = sum_h c_h (a+i+1) I_{a+i,b+j}: multiply the dy-contour
// representation by t = H on the oval and expand.
Row row_r1(int a, int b) {
    Row row{Poly::monomial(1, Rational(a + 1)), Poly{}, Poly{}, Poly{}};
    const Poly2 h = hamiltonian();
    for (const auto& [ij, c] : h.terms())
        row[frame_slot(ij.first, ij.second)] -= Poly(c * Rational(a + ij.first + 1));
    return row;
}

// Same with the dx-contour representation: t (b+1) I = sum c (b+j+1) I.
Row row_r2(int a, int b) {
    Row row{Poly::monomial(1, Rational(b + 1)), Poly{}, Poly{}, Poly{}};
    const Poly2 h = hamiltonian();
    for (const auto& [ij, c] : h.terms())
        row[frame_slot(ij.first, ij.second)] -= Poly(c * Rational(b + ij.second + 1));
    return row;
}

Row combine(const Rational& ca, const Row& ra, const Rational& cb, const Row& rb) {
    Row out;
    for (int i = 0; i < 4; ++i) out[i] = ra[i] * ca + rb[i] * cb;
    return out;
}

// Eliminating one of the two top slots from the (R1, R2) pair gives two rows
// with constant pivots, each solvable for a frame index of maximal total
// degree.  first kills slot F3, second kills slot F2.
struct ElimRows {
    Row first, second;
};

ElimRows elim_rows(int a, int b) {
    Row r1 = row_r1(a, b), r2 = row_r2(a, b);
    ElimRows e{combine(Rational(b + 3), r1, Rational(-(a + 3)), r2),
               combine(Rational(-(b + 2)), r1, Rational(a + 4), r2)};
    if (!e.first[3].is_zero() || !e.second[2].is_zero())
        throw InternalError("row elimination left an unexpected slot");
    return e;
}

// The combination that cancels the t-column as well, leaving a linear
// dependence among the three shifted integrals with constant coefficients.
Row dependence_row(int a, int b) {
    Row row = combine(Rational(b + 1), row_r1(a, b), Rational(-(a + 1)), row_r2(a, b));
    if (!row[0].is_zero()) throw InternalError("t-column failed to cancel");
    return row;
}

} // namespace

RelationInstance relation_residual(Relation which, int k, int l) {
    RelationInstance inst{which, k, l, {}, {}};
    const Poly2 h = hamiltonian();

    switch (which) {
    case Relation::R1:
        inst.lhs.push_back({Poly::monomial(1, Rational(k + 1)), {k, l}, false});
        for (const auto& [ij, c] : h.terms())
            inst.rhs.push_back(
                {Poly(c * Rational(k + ij.first + 1)), {k + ij.first, l + ij.second}, false});
        break;
    case Relation::R2:
        inst.lhs.push_back({Poly::monomial(1, Rational(l + 1)), {k, l}, false});
        for (const auto& [ij, c] : h.terms())
            inst.rhs.push_back(
                {Poly(c * Rational(l + ij.second + 1)), {k + ij.first, l + ij.second}, false});
        break;
    case Relation::R3:
        inst.lhs.push_back({Poly(Rational(k + 1)), {k, l}, false});
        for (const auto& [ij, c] : h.terms())
            inst.rhs.push_back(
                {Poly(c * Rational(ij.first)), {k + ij.first, l + ij.second}, true});
        break;
    case Relation::R4:
        inst.lhs.push_back({Poly(Rational(l + 1)), {k, l}, false});
        for (const auto& [ij, c] : h.terms())
            inst.rhs.push_back(
                {Poly(c * Rational(ij.second)), {k + ij.first, l + ij.second}, true});
        break;
    }
    return inst;
}

PetrovVector ReductionEngine::reduce_monomial(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("reduce_monomial requires k, l >= 0");
    std::lock_guard lock(mu_);
    return reduce_any(k, l);
}

PetrovVector ReductionEngine::reduce_any(int k, int l) {
    auto key = std::make_pair(k, l);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Solve one rewrite row for the slot holding (k, l).  The pivot is a
    // nonzero constant in every branch below; remaining slots recurse.
    auto solve = [&](const Row& row, const std::array<MonomialIndex, 4>& fr, int slot) {
        const Poly& pivot = row[slot];
        if (!pivot.is_constant() || pivot.is_zero())
            throw InternalError("rewrite pivot is not a nonzero constant");
        if (fr[slot].k != k || fr[slot].l != l)
            throw InternalError("rewrite frame does not contain the requested index");
        Rational inv = pivot[0].inv();
        PetrovVector acc;
        for (int i = 0; i < 4; ++i) {
            if (i == slot || row[i].is_zero()) continue;
            if (fr[i].k < 0 || fr[i].l < 0)
                throw InternalError("rewrite touches a negative index with nonzero weight");
            acc += row[i] * reduce_any(fr[i].k, fr[i].l);
        }
        return (-inv) * acc;
    };

    PetrovVector v;
    const int m = k + l;
    if (k == 0 && l == 0) {
        v = {Poly(1), Poly{}, Poly{}};
    } else if (k == 2 && l == 0) {
        v = {Poly{}, Poly(1), Poly{}};
    } else if (k == 3 && l == 0) {
        v = {Poly{}, Poly{}, Poly(1)};
    } else if (k == 1 && l == 0) {
        // Anchored below the valid range both elimination rows lose their
        // t-column, leaving plain linear relations among small indices.
        v = solve(elim_rows(-1, -1).first, frame(-1, -1), 1);
    } else if (k == 1 && l == 1) {
        v = solve(elim_rows(-1, -1).second, frame(-1, -1), 3);
    } else if (l == 0 && m >= 4) {
        v = solve(dependence_row(k - 3, -1), frame(k - 3, -1), 2);
    } else if (k <= 1 || m <= 3) {
        // Valid whenever k != l, which holds for every index routed here.
        v = solve(dependence_row(k - 2, l - 2), frame(k - 2, l - 2), 3);
    } else if (k == 2) {
        v = solve(elim_rows(0, l - 2).second, frame(0, l - 2), 3);
    } else {
        v = solve(elim_rows(k - 3, l - 1).first, frame(k - 3, l - 1), 2);
    }

    if (v.max_degree() > m / 4) {
        std::ostringstream os;
        os << "coefficient degree bound violated at I_{" << k << "," << l << "}";
        throw InternalError(os.str());
    }
    memo_.emplace(key, v);
    return v;
}

PetrovVector ReductionEngine::reduce_density(const Poly2& g) {
    PetrovVector acc;
    std::lock_guard lock(mu_);
    for (const auto& [ij, c] : g.terms()) {
        if (ij.first < 0 || ij.second < 0)
            throw std::invalid_argument("density with negative exponents");
        acc += c * reduce_any(ij.first, ij.second);
    }
    return acc;
}

PetrovVector ReductionEngine::reduce_form(const PolynomialForm& omega) {
    for (const Poly2* part : {&omega.p, &omega.q})
        for (const auto& [ij, c] : part->terms())
            if (ij.first < 0 || ij.second < 0)
                throw std::invalid_argument("form with negative exponents");

    PetrovVector v = reduce_density(omega.green_integrand());
    if (auto n = omega.degree(); n && v.max_degree() > *n / 4)
        throw InternalError("form reduction exceeded the degree bound");
    return v;
}

DegreeProfile ReductionEngine::degree_profile(const PolynomialForm& omega) {
    auto n = omega.degree();
    if (!n) throw std::invalid_argument("degree profile of the zero form");
    PetrovVector v = reduce_form(omega);
    auto opt = [](const Poly& p) -> std::optional<int> {
        if (p.is_zero()) return std::nullopt;
        return p.degree();
    };
    return DegreeProfile{*n, opt(v.p1), opt(v.p2), opt(v.p3), *n / 4};
}

} // namespace abelint
