#include "abelint/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "abelint/errors.hpp"

namespace abelint {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void check(SuiteResult& r, bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back(what);
}

double rel_gap(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-30);
}

const char* rel_name(Relation r) {
    switch (r) {
    case Relation::R1: return "R1";
    case Relation::R2: return "R2";
    case Relation::R3: return "R3";
    default: return "R4";
    }
}

} // namespace

PolynomialForm random_form(Rng& rng, int n) {
    for (;;) {
        PolynomialForm f;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                if (rng.chance(35)) {
                    long c = rng.integer(-5, 5);
                    if (c != 0) f.p.add(i, j, Rational(c, rng.integer(1, 4)));
                }
                if (rng.chance(35)) {
                    long c = rng.integer(-5, 5);
                    if (c != 0) f.q.add(i, j, Rational(c, rng.integer(1, 4)));
                }
            }
        if (!f.degree() || *f.degree() < n) {
            // force the top total degree to actually appear
            int i = static_cast<int>(rng.integer(0, n));
            long c = rng.integer(1, 5) * (rng.chance(50) ? 1 : -1);
            f.q.add(i, n - i, Rational(c, rng.integer(1, 4)));
        }
        if (f.degree() && *f.degree() == n) return f;
    }
}

Poly random_poly(Rng& rng, int max_deg, long amp) {
    for (;;) {
        std::vector<Rational> c;
        c.reserve(max_deg + 1);
        for (int i = 0; i <= max_deg; ++i) c.emplace_back(rng.integer(-amp, amp));
        Poly p = Poly::from_coeffs(std::move(c));
        if (!p.is_zero()) return p;
    }
}

int sample_root_count(const Poly& p, double lo, double hi, int grid) {
    if (p.is_zero()) throw ZeroPolynomialError("sampling the zero polynomial");
    const std::vector<double> pc = p.double_coeffs();
    const std::vector<double> dc = p.derivative().double_coeffs();
    auto horner = [](const std::vector<double>& c, double t) {
        double v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
        return v;
    };

    // strictly interior samples plus a pair hugging the open endpoints
    std::vector<double> ts;
    ts.reserve(grid + 2);
    const double h = (hi - lo) / grid;
    ts.push_back(lo + 1e-12);
    for (int i = 0; i < grid; ++i) ts.push_back(lo + h * (i + 0.5));
    ts.push_back(hi - 1e-12);

    auto bisect = [&](const std::vector<double>& c, double a, double b, double fa) {
        for (int it = 0; it < 120 && b - a > 1e-12; ++it) {
            double m = 0.5 * (a + b);
            double fm = horner(c, m);
            if (fm == 0) return m;
            if ((fa < 0) != (fm < 0)) b = m; else { a = m; fa = fm; }
        }
        return 0.5 * (a + b);
    };

    std::vector<double> roots;
    double fb = horner(pc, ts[0]);
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const double a = ts[i], b = ts[i + 1];
        const double fa = fb;
        fb = horner(pc, b);
        if (fa == 0) { roots.push_back(a); continue; }
        if (fb == 0) continue; // handled as the left endpoint of the next cell
        if ((fa < 0) != (fb < 0)) {
            roots.push_back(bisect(pc, a, b, fa));
            continue;
        }
        // same sign: a hidden pair needs an interior extremum of opposite sign
        const double da = horner(dc, a), db = horner(dc, b);
        if ((da < 0) == (db < 0)) continue;
        const double c = bisect(dc, a, b, da);
        const double fc = horner(pc, c);
        if (fc == 0) {
            roots.push_back(c);
        } else if ((fc < 0) != (fa < 0)) {
            roots.push_back(bisect(pc, a, c, fa));
            roots.push_back(bisect(pc, c, b, fc));
        }
    }

    std::sort(roots.begin(), roots.end());
    int count = 0;
    double last = -1e300;
    for (double r : roots) {
        if (r - last >= 1e-9) ++count;
        last = r;
    }
    return count;
}

SuiteResult verify_relations(const VerifyOptions& opt) {
    SuiteResult res{"relations"};
    const double h = 1e-7;

    std::vector<RelationInstance> insts;
    for (Relation rel : {Relation::R1, Relation::R2, Relation::R3, Relation::R4})
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) insts.push_back(relation_residual(rel, k, l));

    for (double t : {1.0 / 128.0, 1.0 / 80.0}) {
        std::set<MonomialIndex> plain, deriv;
        for (const auto& ri : insts)
            for (const auto* side : {&ri.lhs, &ri.rhs})
                for (const auto& term : *side)
                    (term.derivative ? deriv : plain).insert(term.idx);

        const std::vector<MonomialIndex> pv(plain.begin(), plain.end());
        const std::vector<MonomialIndex> dv(deriv.begin(), deriv.end());
        const auto pvals = eval_monomial_batch(pv, t, opt.oracle);
        const auto up = eval_monomial_batch(dv, t + h, opt.oracle);
        const auto dn = eval_monomial_batch(dv, t - h, opt.oracle);

        std::map<MonomialIndex, double> ival, idot;
        for (size_t i = 0; i < pv.size(); ++i) ival[pv[i]] = pvals[i];
        for (size_t i = 0; i < dv.size(); ++i) idot[dv[i]] = (up[i] - dn[i]) / (2 * h);

        for (const auto& ri : insts) {
            double scale = 1e-30;
            auto side_sum = [&](const std::vector<RelationTerm>& side) {
                double acc = 0;
                for (const auto& term : side) {
                    double v = term.coeff.eval_double(t) *
                               (term.derivative ? idot[term.idx] : ival[term.idx]);
                    acc += v;
                    scale = std::max(scale, std::abs(v));
                }
                return acc;
            };
            const double lhs = side_sum(ri.lhs);
            const double rhs = side_sum(ri.rhs);
            const bool algebraic = ri.which == Relation::R1 || ri.which == Relation::R2;
            const double tol = algebraic ? 1e-8 : 1e-5;
            std::ostringstream what;
            what << rel_name(ri.which) << " at (" << ri.k << "," << ri.l << "), t=" << num(t)
                 << ": |lhs-rhs| = " << num(std::abs(lhs - rhs)) << " vs scale " << num(scale);
            check(res, std::abs(lhs - rhs) <= tol * scale, what.str());
        }
    }
    return res;
}

SuiteResult verify_eq13(ReductionEngine& eng) {
    SuiteResult res{"eq13"};
    struct Line {
        int k, l;
        PetrovVector want;
    };
    const std::vector<Line> lines = {
        {2, 1, {Poly{}, Poly{Rational(1, 2)}, Poly{Rational(-1, 2)}}},
        {3, 1, {Poly{}, Poly{Rational(1, 4)}, Poly{Rational(-1, 4)}}},
        {4, 1, {Poly{}, Poly{Rational(1, 7), Rational(-4, 7)}, Poly{Rational(-1, 7)}}},
        {5, 1, {Poly{}, Poly{Rational(5, 56), Rational(-6, 7)}, Poly{Rational(-5, 56)}}},
        {6, 1,
         {Poly{}, Poly{Rational(5, 84), Rational(-4, 7)},
          Poly{Rational(-5, 84), Rational(-2, 3)}}},
        {2, 2, {Poly{Rational(0), Rational(-1, 3)}, Poly{Rational(1, 6)}, Poly{Rational(-1, 6)}}},
        {4, 2, {Poly{}, Poly{Rational(1, 28), Rational(-1, 7)}, Poly{Rational(-1, 28)}}},
        {5, 2,
         {Poly{}, Poly{Rational(5, 252), Rational(-4, 21)},
          Poly{Rational(-5, 252), Rational(1, 9)}}},
    };
    for (const auto& ln : lines) {
        PetrovVector got = eng.reduce_monomial(ln.k, ln.l);
        std::ostringstream what;
        what << "I_{" << ln.k << "," << ln.l << "}: got (" << got.p1.str() << " | "
             << got.p2.str() << " | " << got.p3.str() << ")";
        check(res, got == ln.want, what.str());
    }
    return res;
}

SuiteResult verify_pf(ReductionEngine& eng, const VerifyOptions& opt) {
    SuiteResult res{"pf"};
    const PFSystem pf = derive_pf(eng);

    PolyMatrix a(3, 3), b(3, 3), q(3, 3);
    a.at(0, 1) = Rational(-1, 12);
    a.at(0, 2) = Rational(1, 12);
    a.at(1, 1) = Rational(-1, 56);
    a.at(1, 2) = Rational(1, 56);
    a.at(2, 1) = Rational(-5, 504);
    a.at(2, 2) = Rational(5, 504);
    b.at(0, 0) = Rational(2, 3);
    b.at(1, 1) = Rational(4, 7);
    b.at(2, 1) = Rational(2, 21);
    b.at(2, 2) = Rational(4, 9);
    q.at(0, 0) = Poly{Rational(-1, 2), Rational(32)};
    q.at(0, 1) = Rational(9);
    q.at(0, 2) = Rational(-10);
    q.at(1, 1) = Poly{Rational(3, 2), Rational(48)};
    q.at(1, 2) = Rational(-5, 2);
    q.at(2, 1) = Poly{Rational(3, 2), Rational(-24)};
    q.at(2, 2) = Poly{Rational(-5, 2), Rational(80)};
    const Poly d{Rational(0), Rational(-1), Rational(64)};

    check(res, pf.A == a, "matrix A mismatch");
    check(res, pf.B == b, "matrix B mismatch");
    check(res, pf.Q == q, "matrix Q mismatch");
    check(res, pf.D == d, "denominator D mismatch: " + pf.D.str());

    const PolyMatrix m = pf.A + Poly::t() * pf.B;
    check(res, m * pf.Q == pf.D * (PolyMatrix::identity(3) - pf.B),
          "identity (A + tB) Q = D (I - B) fails");
    const Poly det_expect{Rational(0), Rational(0), Rational(-1, 378), Rational(32, 189)};
    check(res, m.det3() == det_expect, "det(A + tB) = t^2(64t - 1)/378 fails: " + m.det3().str());

    // numeric residual D J' = Q J, derivative by central differences
    const double h = 1e-7;
    std::vector<double> pts = {1.0 / 200.0, 1.0 / 128.0, 1.0 / 100.0, 1.0 / 80.0};
    for (int i = 0; i < 20; ++i)
        pts.push_back(1.0 / 200.0 + i * (1.0 / 70.0 - 1.0 / 200.0) / 19.0);
    for (double t : pts) {
        const auto j = eval_J(t, opt.oracle);
        const auto ju = eval_J(t + h, opt.oracle);
        const auto jd = eval_J(t - h, opt.oracle);
        const double dt = pf.D.eval_double(t);
        double rr = 0, jj = 0;
        for (int r = 0; r < 3; ++r) {
            double qj = 0;
            for (int c = 0; c < 3; ++c) qj += pf.Q.at(r, c).eval_double(t) * j[c];
            const double resid = dt * (ju[r] - jd[r]) / (2 * h) - qj;
            rr += resid * resid;
            jj += j[r] * j[r];
        }
        check(res, std::sqrt(rr) <= 1e-5 * std::sqrt(jj),
              "residual |D J' - Q J| at t=" + num(t) + " is " + num(std::sqrt(rr)) +
                  " vs |J| = " + num(std::sqrt(jj)));
    }
    return res;
}

SuiteResult verify_riccati(ReductionEngine& eng, const VerifyOptions& opt) {
    SuiteResult res{"riccati"};
    const PFSystem pf = derive_pf(eng);
    const RiccatiW rw = riccati_w(pf);

    check(res, rw.a2 == Poly{Rational(-3, 2), Rational(24)}, "a2 mismatch: " + rw.a2.str());
    check(res, rw.a1 == Poly{Rational(4), Rational(-32)}, "a1 mismatch: " + rw.a1.str());
    check(res, rw.a0 == Poly{Rational(-5, 2)}, "a0 mismatch: " + rw.a0.str());

    const double h = 1e-7;
    for (int i = 0; i < 20; ++i) {
        const double t = 1.0 / 200.0 + i * (1.0 / 70.0 - 1.0 / 200.0) / 19.0;
        const auto j = eval_J(t, opt.oracle);
        const auto ju = eval_J(t + h, opt.oracle);
        const auto jd = eval_J(t - h, opt.oracle);
        const double w = j[1] / j[2];
        const double wp = (ju[1] / ju[2] - jd[1] / jd[2]) / (2 * h);
        const double resid = pf.D.eval_double(t) * wp -
                             (rw.a2.eval_double(t) * w * w + rw.a1.eval_double(t) * w +
                              rw.a0.eval_double(t));
        check(res, std::abs(resid) <= 1e-5,
              "Riccati residual at t=" + num(t) + " is " + num(resid));
    }
    return res;
}

SuiteResult verify_limits(const VerifyOptions& opt) {
    SuiteResult res{"limits"};

    // Near the critical level the position of a contour point can only be
    // pinned to (rounding of H) / |grad H|, which caps the attainable
    // absolute quadrature accuracy around 1e-14; every tolerance below is
    // 1e-10 or looser, so a laxer convergence floor loses nothing.
    OracleConfig cfg = opt.oracle;
    cfg.quad_abs_floor = 1e-12;

    // the integrand localizes at the center, so moment ratios approach the
    // monomial values there
    const double t = kTMax - 1e-6;
    std::vector<MonomialIndex> idxs;
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) idxs.push_back({k, l});
    const auto vals = eval_monomial_batch(idxs, t, cfg);
    check(res, vals[0] > 0, "area not positive near the critical level");
    for (size_t i = 0; i < idxs.size() && vals[0] > 0; ++i) {
        const double want =
            std::pow(kOvalCenterX, idxs[i].k) * std::pow(kOvalCenterY, idxs[i].l);
        const double got = vals[i] / vals[0];
        std::ostringstream what;
        what << "ratio I_{" << idxs[i].k << "," << idxs[i].l << "}/I_{0,0} = " << num(got)
             << ", center value " << num(want);
        check(res, std::abs(got - want) <= 1e-2, what.str());
    }

    PolynomialForm dy_form;
    dy_form.q.add(0, 0, Rational(1));
    for (double s : {1.0 / 200.0, 1.0 / 128.0, 1.0 / 80.0, kTMax - 1e-6}) {
        const double wind = eval_form_integral(dy_form, s, cfg);
        check(res, std::abs(wind) <= 1e-10,
              "closed-contour integral of dy at t=" + num(s) + " is " + num(wind));
        const double area = eval_monomial_integral(0, 0, s, cfg);
        check(res, area > 0, "counterclockwise area at t=" + num(s) + " is " + num(area));
    }

    // the oval collapses onto the center as t approaches the critical value
    const double ts = kTMax - 1e-8;
    const double area = eval_monomial_integral(0, 0, ts, cfg);
    check(res, area > 0 && area <= 1e-5, "near-critical area is " + num(area));
    const Oval ov = trace_oval(ts, 256, opt.oracle);
    double maxd = 0;
    for (const auto& pt : ov.points)
        maxd = std::max(maxd, std::hypot(pt[0] - kOvalCenterX, pt[1] - kOvalCenterY));
    check(res, maxd <= 1e-3, "near-critical oval radius is " + num(maxd));
    return res;
}

SuiteResult verify_fuzz(ReductionEngine& eng, const VerifyOptions& opt) {
    SuiteResult res{"fuzz"};
    BoundEngine be(eng);
    ZeroFinder zf(be.pf(), 1.0 / 200.0, 0.0155, 240, opt.oracle);
    Rng rng(opt.seed);

    for (int n = 1; n <= opt.fuzz_max_degree; ++n) {
        for (int rep = 0; rep < opt.fuzz_per_degree; ++rep) {
            const PolynomialForm f = random_form(rng, n);
            const BoundCertificate cert = be.certificate(f);
            const std::string tag = "n=" + std::to_string(n) + " rep=" + std::to_string(rep);

            check(res, cert.worst_s_bound == 3 * n / 2 + 8,
                  tag + ": bounds: worst-case s count " + std::to_string(cert.worst_s_bound));
            check(res, cert.generic_bound == Rational(7L * n, 4) + Rational(9),
                  tag + ": bounds: generic bound " + cert.generic_bound.str());
            check(res, cert.instance_bound <= cert.worst_case_bound,
                  tag + ": bounds: instance " + std::to_string(cert.instance_bound) +
                      " > worst case " + std::to_string(cert.worst_case_bound));
            check(res, Rational(cert.worst_case_bound) <= cert.generic_bound,
                  tag + ": bounds: worst case " + std::to_string(cert.worst_case_bound) +
                      " > generic " + cert.generic_bound.str());

            auto deg_ok = [](const Poly& p, int cap) { return p.degree() <= cap; };
            check(res,
                  deg_ok(cert.petrov.p1, n / 4) && deg_ok(cert.petrov.p2, n / 4) &&
                      deg_ok(cert.petrov.p3, n / 4),
                  tag + ": degrees: petrov exceeds " + std::to_string(n / 4));
            if (!cert.zero_integral) {
                check(res,
                      deg_ok(cert.tilde.tp1, n / 2 + 2) && deg_ok(cert.tilde.tp2, n / 2 + 2),
                      tag + ": degrees: tilde pair exceeds " + std::to_string(n / 2 + 2));
                if (!cert.tp1_zero)
                    check(res, deg_ok(cert.riccati.C, n + 5),
                          tag + ": degrees: C exceeds " + std::to_string(n + 5));

                const int zn = static_cast<int>(zf.zeros(cert.petrov).size());
                check(res, zn <= cert.instance_bound,
                      tag + ": bounds: numeric count " + std::to_string(zn) +
                          " > instance bound " + std::to_string(cert.instance_bound));
            }

            if (rep % 10 == 0) {
                const long cn = rng.integer(1, 7) * (rng.chance(50) ? 1 : -1);
                const Rational c(cn, rng.integer(1, 5));
                const PolynomialForm scaled{f.p * c, f.q * c};
                const BoundCertificate sc = be.certificate(scaled);
                check(res, sc.instance_bound == cert.instance_bound,
                      tag + ": bounds: scaling changed the bound from " +
                          std::to_string(cert.instance_bound) + " to " +
                          std::to_string(sc.instance_bound));
            }
        }
    }
    return res;
}

SuiteResult verify_oracle_agreement(ReductionEngine& eng, const VerifyOptions& opt) {
    SuiteResult res{"oracle-agreement"};
    const PFSystem pf = derive_pf(eng);
    OracleConfig cfg = opt.oracle;
    cfg.quad_tol = 1e-10;
    const double t0 = 1.0 / 128.0;
    const auto j0 = eval_J(t0, cfg);
    for (double t : {1.0 / 200.0, 3.0 / 256.0, 1.0 / 80.0}) {
        const auto jq = eval_J(t, cfg);
        const auto jo = integrate_pf(pf, t0, j0, t, cfg);
        for (int i = 0; i < 3; ++i)
            check(res, rel_gap(jo[i], jq[i]) <= 1e-8,
                  "J" + std::to_string(i + 1) + " at t=" + num(t) + ": quadrature " +
                      num(jq[i]) + " vs propagated " + num(jo[i]));
    }
    return res;
}

SuiteResult verify_reduction_soundness(ReductionEngine& eng, const VerifyOptions& opt) {
    SuiteResult res{"reduction-soundness"};
    Rng rng(opt.seed);
    std::set<std::pair<int, int>> seen;
    std::vector<MonomialIndex> idxs;
    while (idxs.size() < 50) {
        const int k = static_cast<int>(rng.integer(0, 10));
        const int l = static_cast<int>(rng.integer(0, 10 - k));
        if (seen.insert({k, l}).second) idxs.push_back({k, l});
    }

    std::vector<MonomialIndex> batch = idxs;
    batch.push_back({0, 0});
    batch.push_back({2, 0});
    batch.push_back({3, 0});
    for (double t : {1.0 / 256.0, 1.0 / 128.0, 3.0 / 256.0, 1.0 / 80.0}) {
        const auto vals = eval_monomial_batch(batch, t, opt.oracle);
        const std::array<double, 3> j = {vals[50], vals[51], vals[52]};
        for (size_t i = 0; i < idxs.size(); ++i) {
            const double pred = eng.reduce_monomial(idxs[i].k, idxs[i].l).eval_double(t, j);
            std::ostringstream what;
            what << "I_{" << idxs[i].k << "," << idxs[i].l << "} at t=" << num(t)
                 << ": quadrature " << num(vals[i]) << " vs reduction " << num(pred);
            check(res, rel_gap(pred, vals[i]) <= 1e-8, what.str());
        }
    }
    return res;
}

namespace {

// Random square-free test polynomial with coefficients in [-10, 10].  Mixes
// plain random coefficients (roots essentially never fall below 1/64, so the
// usual count is zero) with planted-root products that place a few roots
// inside and just outside the interval, well separated so sign sampling in
// doubles stays trustworthy.
Poly random_sturm_poly(Rng& rng) {
    for (;;) {
        Poly p;
        if (rng.chance(45)) {
            const int deg = static_cast<int>(rng.integer(1, 10));
            std::vector<Rational> c(deg + 1);
            for (auto& x : c) {
                const long den = rng.integer(1, 256);
                x = Rational(rng.integer(-10 * den, 10 * den), den);
            }
            p = Poly::from_coeffs(std::move(c));
        } else {
            const int deg = static_cast<int>(rng.integer(2, 10));
            int inside = static_cast<int>(rng.integer(0, std::min(4L, static_cast<long>(deg))));
            std::vector<Rational> roots;
            auto admit = [&](const Rational& r) {
                for (const auto& o : roots)
                    if (std::abs((r - o).to_double()) < 1e-6) return false;
                roots.push_back(r);
                return true;
            };
            if (rng.chance(10) && inside > 0) {
                roots.emplace_back(0);
                --inside;
            }
            int guard = 0;
            while (inside > 0 && guard++ < 200) {
                const long lat = 1L << (4 + 2 * rng.integer(0, 2)); // 16, 64, 256
                // numerator up to lat lands the root in (0, 1/64]
                const Rational r(rng.integer(1, lat), 64 * lat);
                if (admit(r)) --inside;
            }
            while (static_cast<int>(roots.size()) < deg && guard++ < 400) {
                Rational r;
                if (rng.chance(30)) // just outside, above 1/64 or below 0
                    r = rng.chance(50) ? Rational(rng.integer(5, 64), 256)
                                       : Rational(-rng.integer(1, 64), 512);
                else
                    r = Rational(rng.integer(8, 96) * (rng.chance(50) ? 1 : -1), 32);
                admit(r);
            }
            if (static_cast<int>(roots.size()) != deg) continue;
            p = Poly{rng.chance(50) ? Rational(1) : Rational(-1)};
            for (const auto& r : roots) p = p * Poly{-r, Rational(1)};
            Rational maxabs(0);
            for (const auto& c : p.coeffs()) {
                const Rational a = c.abs();
                if (maxabs < a) maxabs = a;
            }
            if (maxabs > Rational(10)) p = p * (Rational(10) / maxabs);
        }
        if (p.degree() < 1) continue;
        if (Poly::gcd(p, p.derivative()).degree() >= 1) continue;
        return p;
    }
}

} // namespace

SuiteResult verify_sturm_oracle(const VerifyOptions& opt) {
    SuiteResult res{"sturm-oracle"};
    Rng rng(opt.seed);
    const OpenInterval iv{Rational(0), Rational(1, 64)};
    for (int i = 0; i < 1000; ++i) {
        const Poly p = random_sturm_poly(rng);
        const int want = sturm_count(p, iv);
        const int got = sample_root_count(p, 0.0, 1.0 / 64.0, 1 << 16);
        check(res, want == got,
              "poly #" + std::to_string(i) + " (" + p.str() + "): sturm " +
                  std::to_string(want) + " vs sampled " + std::to_string(got));
    }
    return res;
}

} // namespace abelint
