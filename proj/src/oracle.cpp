#include "abelint/oracle.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "abelint/errors.hpp"

namespace abelint {

double hamiltonian_value(double x, double y) {
    return x * x * y * (1.0 - x - y);
}

std::array<double, 2> hamiltonian_grad(double x, double y) {
    double s = 1.0 - x - y;
    return {x * y * (2.0 * s - x), x * x * (s - y)};
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence (the usual gauleg construction).
struct GaussRule {
    std::vector<double> x, w;

    explicit GaussRule(int n) : x(n), w(n) {
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

constexpr int kNodesPerPanel = 16;

const GaussRule& panel_rule() {
    static const GaussRule rule(kNodesPerPanel);
    return rule;
}

// Distance from the center to the triangle boundary along direction
// (c, s); finite for every direction and an upper bound for the oval radius.
double triangle_radius(double c, double s) {
    double r = std::numeric_limits<double>::infinity();
    if (c < 0) r = std::min(r, -kOvalCenterX / c);
    if (s < 0) r = std::min(r, -kOvalCenterY / s);
    if (c + s > 0) r = std::min(r, (1.0 - kOvalCenterX - kOvalCenterY) / (c + s));
    return r;
}

// Radius of the level set H = t along the ray.  The bracket (0, r_tri) is
// guaranteed: H - t > 0 at the center and -t < 0 on the triangle boundary,
// with a single crossing by log-concavity of H.  Safeguarded Newton.
double solve_ray(double t, double c, double s, double hint, double tol) {
    auto g = [&](double r) {
        return hamiltonian_value(kOvalCenterX + r * c, kOvalCenterY + r * s) - t;
    };
    double lo = 0.0, hi = triangle_radius(c, s);
    double r = (hint > lo && hint < hi) ? hint : 0.5 * (lo + hi);
    // Polish all the way to the arithmetic limit, not just to |H - t| <= tol:
    // near the critical level the gradient degenerates and a residual-only
    // stop would leave the position several digits short of what doubles
    // allow, which then shows up as noise in the contour quadrature.
    double best = r;
    double best_abs = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
        const double gr = g(r);
        if (std::abs(gr) < best_abs) {
            best_abs = std::abs(gr);
            best = r;
        }
        if (gr == 0.0) break;
        (gr > 0 ? lo : hi) = r;
        auto grad = hamiltonian_grad(kOvalCenterX + r * c, kOvalCenterY + r * s);
        double dg = grad[0] * c + grad[1] * s;
        double next = r - gr / dg;
        if (!(dg != 0 && next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == r || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * r) break;
        r = next;
    }
    if (best_abs <= tol) return best;
    std::ostringstream os;
    os << "ray solve stalled at t=" << t << " direction (" << c << ", " << s << ")";
    throw NonConvergence(os.str());
}

struct ContourPoint {
    double x, y;   // position on the oval
    double dx, dy; // derivatives with respect to theta
};

ContourPoint contour_point(double t, double theta, double& r_hint, double tol) {
    double c = std::cos(theta), s = std::sin(theta);
    double r = solve_ray(t, c, s, r_hint, tol);
    r_hint = r;
    auto grad = hamiltonian_grad(kOvalCenterX + r * c, kOvalCenterY + r * s);
    double radial = grad[0] * c + grad[1] * s;      // < 0: H decreases outward
    double angular = -grad[0] * s + grad[1] * c;
    double dr = -r * angular / radial;              // implicit differentiation
    return {kOvalCenterX + r * c, kOvalCenterY + r * s,
            dr * c - r * s, dr * s + r * c};
}

using Integrand = std::function<double(const ContourPoint&)>;

// Composite Gauss-Legendre over theta in [0, 2pi), doubling the panel count
// until the whole batch of integrands is stable.
std::vector<double> contour_integrate(double t, const std::vector<Integrand>& fs,
                                      const OracleConfig& cfg) {
    if (!(t > 0.0 && t < kTMax))
        throw std::invalid_argument("contour integral outside the oval range (0, 1/64)");
    const GaussRule& rule = panel_rule();
    std::vector<double> prev;
    for (int panels = 8; panels * kNodesPerPanel <= cfg.max_quad_nodes; panels *= 2) {
        std::vector<double> vals(fs.size(), 0.0);
        double hint = -1.0;
        const double width = 2.0 * M_PI / panels;
        for (int p = 0; p < panels; ++p) {
            double mid = (p + 0.5) * width, half = 0.5 * width;
            for (int q = 0; q < kNodesPerPanel; ++q) {
                ContourPoint cp = contour_point(t, mid + half * rule.x[q], hint, cfg.trace_tol);
                double wq = half * rule.w[q];
                for (size_t m = 0; m < fs.size(); ++m) vals[m] += wq * fs[m](cp);
            }
        }
        if (!prev.empty()) {
            bool ok = true;
            for (size_t m = 0; m < fs.size(); ++m)
                ok = ok && std::abs(vals[m] - prev[m]) <=
                               std::max(cfg.quad_tol * std::abs(vals[m]), cfg.quad_abs_floor);
            if (ok) return vals;
        }
        prev = std::move(vals);
    }
    throw NonConvergence("contour quadrature exhausted its node budget");
}

Integrand monomial_integrand(int k, int l) {
    if (l < 0 || k < -2 || k == -1)
        throw std::invalid_argument("monomial integrand needs l >= 0, k >= -2, k != -1");
    return [k, l](const ContourPoint& p) {
        return std::pow(p.x, k + 1) * std::pow(p.y, l) * p.dy / (k + 1);
    };
}

Integrand monomial_integrand_dx(int l) {
    if (l < 0) throw std::invalid_argument("monomial integrand needs l >= 0");
    return [l](const ContourPoint& p) {
        return -std::pow(p.y, l + 1) * p.dx / ((l + 1) * p.x);
    };
}

} // namespace

Oval trace_oval(double t, int n, const OracleConfig& cfg) {
    if (!(t > 0.0 && t < kTMax))
        throw std::invalid_argument("oval level must lie in (0, 1/64)");
    if (n < 64) throw std::invalid_argument("need at least 64 trace points");
    Oval oval;
    oval.t = t;
    oval.theta.resize(n);
    oval.points.resize(n);
    double hint = -1.0;
    for (int i = 0; i < n; ++i) {
        double theta = 2.0 * M_PI * i / n;
        ContourPoint p = contour_point(t, theta, hint, cfg.trace_tol);
        oval.theta[i] = theta;
        oval.points[i] = {p.x, p.y};
    }
    return oval;
}

double eval_monomial_integral(int k, int l, double t, const OracleConfig& cfg) {
    Integrand f = (k == -1) ? monomial_integrand_dx(l) : monomial_integrand(k, l);
    return contour_integrate(t, {f}, cfg)[0];
}

std::vector<double> eval_monomial_batch(const std::vector<MonomialIndex>& idxs, double t,
                                        const OracleConfig& cfg) {
    std::vector<Integrand> fs;
    fs.reserve(idxs.size());
    for (const MonomialIndex& idx : idxs)
        fs.push_back(idx.k == -1 ? monomial_integrand_dx(idx.l)
                                 : monomial_integrand(idx.k, idx.l));
    return contour_integrate(t, fs, cfg);
}

double eval_form_integral(const PolynomialForm& omega, double t, const OracleConfig& cfg) {
    struct Term {
        int i, j;
        double c;
    };
    auto terms_of = [](const Poly2& p) {
        std::vector<Term> out;
        for (const auto& [ij, c] : p.terms()) out.push_back({ij.first, ij.second, c.to_double()});
        return out;
    };
    auto tp = terms_of(omega.p), tq = terms_of(omega.q);
    Integrand f = [tp, tq](const ContourPoint& pt) {
        double acc = 0.0;
        for (const Term& t : tp) acc += t.c * std::pow(pt.x, t.i) * std::pow(pt.y, t.j) * pt.dx;
        for (const Term& t : tq) acc += t.c * std::pow(pt.x, t.i) * std::pow(pt.y, t.j) * pt.dy;
        return acc;
    };
    return contour_integrate(t, {f}, cfg)[0];
}

std::array<double, 3> eval_J(double t, const OracleConfig& cfg) {
    std::vector<Integrand> fs{monomial_integrand(0, 0), monomial_integrand(2, 0),
                              monomial_integrand(3, 0)};
    auto v = contour_integrate(t, fs, cfg);
    return {v[0], v[1], v[2]};
}

std::array<double, 3> integrate_pf(const PFSystem& pf, double t0, std::array<double, 3> j0,
                                   double t1, const OracleConfig& cfg) {
    const double lo = cfg.ode_margin, hi = kTMax - cfg.ode_margin;
    for (double v : {t0, t1})
        if (!(v >= lo && v <= hi))
            throw std::invalid_argument("propagation endpoint too close to a singular level");
    if (t0 == t1) return j0;

    std::vector<double> dd = pf.D.double_coeffs();
    std::vector<std::vector<double>> qc;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) qc.push_back(pf.Q.at(i, j).double_coeffs());

    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0.0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    using State = std::array<double, 3>;
    auto rhs = [&](const State& j, State& djdt, double t) {
        double d = horner(dd, t);
        for (int r = 0; r < 3; ++r)
            djdt[r] = (horner(qc[3 * r], t) * j[0] + horner(qc[3 * r + 1], t) * j[1] +
                       horner(qc[3 * r + 2], t) * j[2]) /
                      d;
    };
    auto observer = [](const State& j, double t) {
        for (double v : j)
            if (!(v > 0.0) || !std::isfinite(v)) {
                std::ostringstream os;
                os << "basis integral lost positivity near t=" << t;
                throw NonConvergence(os.str());
            }
    };

    namespace ode = boost::numeric::odeint;
    auto stepper =
        ode::make_controlled(cfg.ode_abs_tol, cfg.ode_rel_tol,
                             ode::runge_kutta_fehlberg78<State>());
    double dt = (t1 - t0) / 64.0;
    ode::integrate_adaptive(stepper, rhs, j0, t0, t1, dt, observer);
    return j0;
}

ZeroFinder::ZeroFinder(const PFSystem& pf, double t_lo, double t_hi, int grid_n,
                       const OracleConfig& cfg)
    : pf_(pf), cfg_(cfg) {
    if (!(t_lo > 0.0 && t_hi < kTMax && t_lo < t_hi))
        throw std::invalid_argument("zero search range must sit inside (0, 1/64)");
    if (grid_n < 100) throw std::invalid_argument("zero search grid needs at least 100 points");

    ts_.resize(grid_n);
    js_.resize(grid_n);
    for (int i = 0; i < grid_n; ++i)
        ts_[i] = t_lo + (t_hi - t_lo) * i / (grid_n - 1);

    // Seed once by quadrature at the node nearest the reference level 1/128,
    // then sweep the propagation outward in both directions.
    int seed = 0;
    for (int i = 1; i < grid_n; ++i)
        if (std::abs(ts_[i] - 1.0 / 128.0) < std::abs(ts_[seed] - 1.0 / 128.0)) seed = i;
    js_[seed] = eval_J(ts_[seed], cfg_);
    for (int i = seed + 1; i < grid_n; ++i)
        js_[i] = integrate_pf(pf_, ts_[i - 1], js_[i - 1], ts_[i], cfg_);
    for (int i = seed - 1; i >= 0; --i)
        js_[i] = integrate_pf(pf_, ts_[i + 1], js_[i + 1], ts_[i], cfg_);
}

double ZeroFinder::eval_integral(const PetrovVector& v, double t) const {
    auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
    int idx = static_cast<int>(std::clamp<std::ptrdiff_t>(it - ts_.begin(), 0,
                                                          ts_.size() - 1));
    if (idx > 0 && std::abs(ts_[idx - 1] - t) < std::abs(ts_[idx] - t)) --idx;
    std::array<double, 3> j =
        (ts_[idx] == t) ? js_[idx] : integrate_pf(pf_, ts_[idx], js_[idx], t, cfg_);
    return v.eval_double(t, j);
}

std::vector<double> ZeroFinder::zeros(const PetrovVector& v) const {
    std::vector<double> roots;
    std::vector<double> vals(ts_.size());
    for (size_t i = 0; i < ts_.size(); ++i) vals[i] = v.eval_double(ts_[i], js_[i]);

    for (size_t i = 0; i < ts_.size(); ++i)
        if (vals[i] == 0.0) roots.push_back(ts_[i]);

    for (size_t i = 1; i < ts_.size(); ++i) {
        if (vals[i - 1] == 0.0 || vals[i] == 0.0) continue;
        if ((vals[i - 1] > 0) == (vals[i] > 0)) continue;
        double a = ts_[i - 1], b = ts_[i];
        double fa = vals[i - 1];
        while (b - a > 1e-10) {
            double m = 0.5 * (a + b);
            double fm = eval_integral(v, m);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if ((fm > 0) == (fa > 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        roots.push_back(0.5 * (a + b));
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 2e-9) out.push_back(r);
    return out;
}

std::vector<double> count_zeros_numeric(const PFSystem& pf, const PetrovVector& v,
                                        double t_lo, double t_hi, int grid_n,
                                        const OracleConfig& cfg) {
    return ZeroFinder(pf, t_lo, t_hi, grid_n, cfg).zeros(v);
}

std::vector<double> count_zeros_numeric(ReductionEngine& eng, const PFSystem& pf,
                                        const PolynomialForm& omega, double t_lo,
                                        double t_hi, int grid_n, const OracleConfig& cfg) {
    return count_zeros_numeric(pf, eng.reduce_form(omega), t_lo, t_hi, grid_n, cfg);
}

} // namespace abelint
