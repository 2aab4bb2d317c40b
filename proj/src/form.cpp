#include "abelint/form.hpp"

#include <algorithm>
#include <cmath>

namespace abelint {

Poly2 Poly2::monomial(int i, int j, const Rational& c) {
    Poly2 p;
    p.add(i, j, c);
    return p;
}

void Poly2::add(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> Poly2::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
    return d;
}

Poly2 Poly2::dx() const {
    Poly2 out;
    for (const auto& [ij, c] : terms_)
        if (ij.first != 0) out.add(ij.first - 1, ij.second, c * Rational(ij.first));
    return out;
}

Poly2 Poly2::dy() const {
    Poly2 out;
    for (const auto& [ij, c] : terms_)
        if (ij.second != 0) out.add(ij.first, ij.second - 1, c * Rational(ij.second));
    return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ij, c] : a.terms_)
        for (const auto& [kl, d] : b.terms_)
            out.add(ij.first + kl.first, ij.second + kl.second, c * d);
    return out;
}

Poly2 operator*(const Poly2& a, const Rational& s) {
    Poly2 out;
    for (const auto& [ij, c] : a.terms_) out.add(ij.first, ij.second, c * s);
    return out;
}

double Poly2::eval(double x, double y) const {
    double acc = 0.0;
    for (const auto& [ij, c] : terms_)
        acc += c.to_double() * std::pow(x, ij.first) * std::pow(y, ij.second);
    return acc;
}

Poly2 hamiltonian() {
    Poly2 h;
    h.add(2, 1, Rational(1));
    h.add(3, 1, Rational(-1));
    h.add(2, 2, Rational(-1));
    return h;
}

std::optional<int> PolynomialForm::degree() const {
    auto dp = p.total_degree(), dq = q.total_degree();
    if (!dp) return dq;
    if (!dq) return dp;
    return std::max(*dp, *dq);
}

Poly2 PolynomialForm::green_integrand() const {
    return q.dx() - p.dy();
}

} // namespace abelint
