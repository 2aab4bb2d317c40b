#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abelint/bound.hpp"
#include "abelint/oracle.hpp"

namespace abelint {

/// Outcome of one invariant suite: number of individual checks performed and
/// descriptions of the ones that failed (empty means full pass).
struct SuiteResult {
    std::string suite;
    int checks = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int fuzz_per_degree = 100;
    int fuzz_max_degree = 8;
    OracleConfig oracle;
};

/// Deterministic generator with portable draws (plain modulo on the raw
/// 64-bit stream; distribution classes differ across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    /// Uniform integer in [lo, hi], inclusive.
    long integer(long lo, long hi) {
        return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return integer(0, 99) < percent; }

private:
    std::mt19937_64 g_;
};

/// Random 1-form of exact total degree n with sparse small rational
/// coefficients (values in [-5, 5]).
PolynomialForm random_form(Rng& rng, int n);

/// Random polynomial of degree <= max_deg with integer coefficients in
/// [-amp, amp]; never the zero polynomial.
Poly random_poly(Rng& rng, int max_deg, long amp);

/// Test-side root counter independent of Sturm sequences: dense sign sampling
/// over the open interval plus a derivative-extremum sweep that catches pairs
/// of roots hiding between adjacent samples.  Exact for square-free inputs
/// unless three or more roots share one grid cell.
int sample_root_count(const Poly& p, double lo, double hi, int grid);

/// All four rewrite identities at anchors (k,l) in {0,1,2}^2, t in
/// {1/128, 1/80}; algebraic ones to 1e-8 relative, derivative ones to 1e-5
/// (central differences, step 1e-7).
SuiteResult verify_relations(const VerifyOptions& opt = {});

/// The eight classical reductions of the I_{k,1}, I_{k,2} family, exact.
SuiteResult verify_eq13(ReductionEngine& eng);

/// Derived system fixtures (A, B, Q, D), the exact matrix identities, the
/// determinant, and the numeric residual D J' - Q J on sample levels.
SuiteResult verify_pf(ReductionEngine& eng, const VerifyOptions& opt = {});

/// Riccati coefficients for w = J2/J3, exact and as a numeric residual.
SuiteResult verify_riccati(ReductionEngine& eng, const VerifyOptions& opt = {});

/// Behaviour toward the critical level: moment ratios localize at the
/// center, ovals shrink, orientation and positivity hold.
SuiteResult verify_limits(const VerifyOptions& opt = {});

/// Random-form soundness sweep: certificate chain arithmetic, degree ledger,
/// numeric zero count vs instance bound, scaling invariance.
SuiteResult verify_fuzz(ReductionEngine& eng, const VerifyOptions& opt = {});

/// Quadrature vs ODE propagation of the basis at reference levels.
SuiteResult verify_oracle_agreement(ReductionEngine& eng, const VerifyOptions& opt = {});

/// Random monomials: reduction coefficients times quadrature basis values
/// reproduce direct quadrature of the monomial integral.
SuiteResult verify_reduction_soundness(ReductionEngine& eng, const VerifyOptions& opt = {});

/// Sturm counts vs the sampling counter on random square-free polynomials.
SuiteResult verify_sturm_oracle(const VerifyOptions& opt = {});

} // namespace abelint
