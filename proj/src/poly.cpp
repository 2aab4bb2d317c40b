#include "abelint/poly.hpp"

#include <ostream>
#include <sstream>

#include "abelint/errors.hpp"

namespace abelint {

namespace {
const Rational kZero{};
}

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::initializer_list<Rational> ascending) : c_(ascending) {
    trim();
}

Poly Poly::from_coeffs(std::vector<Rational> ascending) {
    Poly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(int power, const Rational& coeff) {
    if (power < 0) throw std::invalid_argument("monomial with negative power");
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(power + 1, Rational(0));
        p.c_.back() = coeff;
    }
    return p;
}

const Rational& Poly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly::from_coeffs(std::move(out));
}

Poly operator*(const Poly& a, const Rational& s) {
    if (s.is_zero()) return {};
    Poly out = a;
    for (auto& c : out.c_) c *= s;
    return out;
}

Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return from_coeffs(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

std::vector<double> Poly::double_coeffs() const {
    std::vector<double> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].to_double();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly{}, rem};
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        rem -= monomial(shift, f) * b;
    }
    return {from_coeffs(std::move(q)), rem};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Poly Poly::squarefree_part() const {
    if (is_zero()) return {};
    if (degree() == 0) return *this;
    Poly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return div_exact(*this, g);
}

Poly Poly::monic() const {
    return *this * leading().inv();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1)) && i > 0;
        if (!unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

void normalize_primitive(std::vector<Poly*> ps) {
    Rational content;
    for (const Poly* p : ps)
        for (const Rational& c : p->coeffs()) content = Rational::content_gcd(content, c);
    if (content.is_zero() || content == Rational(1)) return;
    Rational scale = content.inv();
    for (Poly* p : ps) *p = *p * scale;
}

} // namespace abelint
