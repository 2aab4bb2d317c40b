// Command-line front end: Petrov reduction, differential system derivation,
// integral evaluation, zero location, bound certificates and the invariant
// suites.  Exact data crosses the boundary as fraction strings; only oracle
// output is floating point.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "abelint/bound.hpp"
#include "abelint/errors.hpp"
#include "abelint/io.hpp"
#include "abelint/oracle.hpp"
#include "abelint/verify.hpp"

namespace {

using namespace abelint;

struct MonomialOrForm {
    std::string form_path;
    std::vector<long> monomial;

    bool has_form() const { return !form_path.empty(); }

    void add_to(CLI::App* cmd) {
        auto* f = cmd->add_option("--form", form_path, "form document (JSON file)");
        auto* m = cmd->add_option("--monomial", monomial, "exponents K L of x^K y^L")
                      ->expected(2);
        f->excludes(m);
    }

    /// The 1-form x^{K+1} y^L dy / (K+1), whose contour integral is the basic
    /// double integral of x^K y^L.
    PolynomialForm resolve() const {
        if (has_form()) return load_form_file(form_path);
        if (monomial.size() != 2) throw std::invalid_argument("need --form or --monomial");
        const long k = monomial[0], l = monomial[1];
        if (k < 0 || l < 0) throw std::invalid_argument("monomial exponents must be >= 0");
        PolynomialForm f;
        f.q.add(static_cast<int>(k) + 1, static_cast<int>(l), Rational(1, k + 1));
        return f;
    }
};

Rational parse_level(const std::string& text) {
    const Rational t = Rational::parse(text);
    if (!(Rational(0) < t && t < Rational(1, 64)))
        throw std::invalid_argument("level t must lie in (0, 1/64)");
    return t;
}

int run_reduce(ReductionEngine& eng, const MonomialOrForm& src) {
    nlohmann::json out;
    if (src.has_form()) {
        const PolynomialForm f = load_form_file(src.form_path);
        out["form"] = form_to_json(f);
        out["petrov"] = petrov_to_json(eng.reduce_form(f));
        out["degree_profile"] = degree_profile_json(eng.degree_profile(f));
    } else {
        if (src.monomial.size() != 2) throw std::invalid_argument("need --form or --monomial");
        const long k = src.monomial[0], l = src.monomial[1];
        out["monomial"] = {k, l};
        out["petrov"] = petrov_to_json(eng.reduce_monomial(static_cast<int>(k),
                                                           static_cast<int>(l)));
        out["degree_bound"] = (k + l) / 4;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_pf(ReductionEngine& eng, const std::string& emit) {
    const PFSystem pf = derive_pf(eng);
    nlohmann::json out;
    if (emit == "matrices")
        out = pf_matrices_json(pf);
    else if (emit == "ode")
        out = pf_ode_json(pf);
    else
        out = riccati_w_json(riccati_w(pf));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_eval(ReductionEngine& eng, const MonomialOrForm& src, const std::string& t_text,
             const std::string& method, const OracleConfig& cfg) {
    const Rational t = parse_level(t_text);
    const double td = t.to_double();
    const PolynomialForm f = src.resolve();

    std::cout << std::setprecision(17) << "method,t,I,J1,J2,J3\n";
    if (method == "quad" || method == "both") {
        const double i = eval_form_integral(f, td, cfg);
        const auto j = eval_J(td, cfg);
        std::cout << "quad," << td << "," << i << "," << j[0] << "," << j[1] << "," << j[2]
                  << "\n";
    }
    if (method == "ode" || method == "both") {
        const PFSystem pf = derive_pf(eng);
        const PetrovVector v = eng.reduce_form(f);
        const double t0 = 1.0 / 128.0;
        const auto j = integrate_pf(pf, t0, eval_J(t0, cfg), td, cfg);
        std::cout << "ode," << td << "," << v.eval_double(td, j) << "," << j[0] << ","
                  << j[1] << "," << j[2] << "\n";
    }
    return 0;
}

int run_zeros(ReductionEngine& eng, const MonomialOrForm& src, const std::string& lo_text,
              const std::string& hi_text, int grid, const OracleConfig& cfg) {
    const Rational lo = parse_level(lo_text), hi = parse_level(hi_text);
    const PetrovVector v = eng.reduce_form(src.resolve());
    const PFSystem pf = derive_pf(eng);
    std::cout << std::setprecision(17) << "t\n";
    if (!v.is_zero()) {
        ZeroFinder zf(pf, lo.to_double(), hi.to_double(), grid, cfg);
        for (double z : zf.zeros(v)) std::cout << z << "\n";
    }
    return 0;
}

int run_bound(ReductionEngine& eng, const MonomialOrForm& src) {
    BoundEngine be(eng);
    const BoundCertificate cert = be.certificate(src.resolve());
    std::cout << certificate_json(cert).dump(2) << "\n";
    return 0;
}

int run_verify(ReductionEngine& eng, const std::string& suite, const VerifyOptions& opt) {
    SuiteResult res;
    if (suite == "relations")
        res = verify_relations(opt);
    else if (suite == "eq13")
        res = verify_eq13(eng);
    else if (suite == "pf")
        res = verify_pf(eng, opt);
    else if (suite == "riccati")
        res = verify_riccati(eng, opt);
    else if (suite == "limits")
        res = verify_limits(opt);
    else
        res = verify_fuzz(eng, opt);

    std::cout << "suite " << res.suite << ": " << res.checks << " checks, "
              << res.failures.size() << " failures\n";
    size_t shown = 0;
    for (const auto& f : res.failures) {
        if (++shown > 20) {
            std::cerr << "... " << res.failures.size() - 20 << " more\n";
            break;
        }
        std::cerr << "FAIL " << f << "\n";
    }
    return res.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic and numeric toolkit for Abelian integrals over the ovals of "
                 "x^2 y (1 - x - y)"};
    app.require_subcommand(1);

    MonomialOrForm reduce_src, eval_src, zeros_src, bound_src;
    std::string emit, t_text = "1/128", method = "quad";
    std::string lo_text = "1/200", hi_text = "31/2000";
    int grid = 256;
    VerifyOptions vopt;
    std::string suite;

    auto* cmd_reduce = app.add_subcommand("reduce", "decompose an integral in the module basis");
    reduce_src.add_to(cmd_reduce);

    auto* cmd_pf = app.add_subcommand("pf", "emit the derived differential systems");
    cmd_pf->add_option("--emit", emit, "matrices|ode|riccati")
        ->required()
        ->check(CLI::IsMember({"matrices", "ode", "riccati"}));

    auto* cmd_eval = app.add_subcommand("eval", "evaluate the integral numerically");
    eval_src.add_to(cmd_eval);
    cmd_eval->add_option("--t", t_text, "level t as an exact fraction");
    cmd_eval->add_option("--method", method, "quad|ode|both")
        ->check(CLI::IsMember({"quad", "ode", "both"}));

    auto* cmd_zeros = app.add_subcommand("zeros", "locate zeros of the integral");
    zeros_src.add_to(cmd_zeros);
    cmd_zeros->add_option("--tlo", lo_text, "lower end of the search range");
    cmd_zeros->add_option("--thi", hi_text, "upper end of the search range");
    cmd_zeros->add_option("--grid", grid, "propagation grid size");

    auto* cmd_bound = app.add_subcommand("bound", "zero-count bound certificate");
    bound_src.add_to(cmd_bound);

    auto* cmd_verify = app.add_subcommand("verify", "run an invariant suite");
    cmd_verify->add_option("--suite", suite, "relations|eq13|pf|riccati|limits|fuzz")
        ->required()
        ->check(CLI::IsMember({"relations", "eq13", "pf", "riccati", "limits", "fuzz"}));
    cmd_verify->add_option("--seed", vopt.seed, "fuzz seed");
    cmd_verify->add_option("--per-degree", vopt.fuzz_per_degree, "fuzz forms per degree");
    cmd_verify->add_option("--max-degree", vopt.fuzz_max_degree, "largest fuzz degree");

    // oracle tolerance knobs, shared by eval/zeros/verify
    OracleConfig shared_cfg;
    for (auto* cmd : {cmd_eval, cmd_zeros, cmd_verify}) {
        cmd->add_option("--quad-tol", shared_cfg.quad_tol, "relative quadrature target");
        cmd->add_option("--ode-rel-tol", shared_cfg.ode_rel_tol, "ODE relative tolerance");
        cmd->add_option("--ode-abs-tol", shared_cfg.ode_abs_tol, "ODE absolute tolerance");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        ReductionEngine eng;
        vopt.oracle = shared_cfg;
        if (app.got_subcommand(cmd_reduce)) return run_reduce(eng, reduce_src);
        if (app.got_subcommand(cmd_pf)) return run_pf(eng, emit);
        if (app.got_subcommand(cmd_eval))
            return run_eval(eng, eval_src, t_text, method, shared_cfg);
        if (app.got_subcommand(cmd_zeros))
            return run_zeros(eng, zeros_src, lo_text, hi_text, grid, shared_cfg);
        if (app.got_subcommand(cmd_bound)) return run_bound(eng, bound_src);
        if (app.got_subcommand(cmd_verify)) return run_verify(eng, suite, vopt);
    } catch (const FormParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
