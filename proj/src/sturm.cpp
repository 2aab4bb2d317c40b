#include "abelint/sturm.hpp"

#include <vector>

#include "abelint/errors.hpp"

namespace abelint {

OpenInterval::OpenInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("empty interval: lo must be < hi");
}

namespace {

// Sign variations of the Sturm chain evaluated at x; zero values are skipped.
int variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const Poly& s : chain) {
        int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

} // namespace

int sturm_count(const Poly& p, const OpenInterval& iv) {
    if (p.is_zero())
        throw ZeroPolynomialError("root count of the zero polynomial is undefined");
    if (p.degree() == 0) return 0;

    Poly q = p.squarefree_part();

    // Divide out endpoint roots so the classical half-open count (lo, hi]
    // becomes a count of the open interval.  q is square-free, so one exact
    // division per endpoint suffices.
    for (const Rational& end : {iv.lo, iv.hi}) {
        if (!q.eval(end).is_zero()) continue;
        q = Poly::div_exact(q, Poly{-end, Rational(1)});
    }
    if (q.degree() <= 0) return 0;

    std::vector<Poly> chain{q, q.derivative()};
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        chain.push_back(-Poly::divmod(a, b).second);
    }
    chain.pop_back();

    return variations(chain, iv.lo) - variations(chain, iv.hi);
}

} // namespace abelint
