#include "abelint/bound.hpp"

#include "abelint/errors.hpp"

namespace abelint {

std::string BoundCertificate::chain() const {
    if (zero_integral) return "zero-integral";
    if (tp1_zero) return "polynomial-s";
    if (p1_zero) return "direct-riccati";
    return "full";
}

BoundEngine::BoundEngine(ReductionEngine& eng)
    : eng_(eng),
      pf_(derive_pf(eng)),
      xyz_(xyz_system(pf_)),
      rw_(riccati_w(pf_)),
      domain_(Rational(0), Rational(1, 64)) {}

TildePair BoundEngine::tilde_polys(const PetrovVector& v) const {
    if (v.is_zero()) throw std::invalid_argument("tilde pair of the zero vector");

    TildePair tp;
    if (v.p1.is_zero()) {
        tp.tp1 = v.p2;
        tp.tp2 = v.p3;
        tp.direct = true;
    } else {
        const Poly& d = pf_.D;
        const Poly t = Poly::t();
        // Quotient rule applied to I / (p1 sqrt(t)), with D J' = Q J
        // substituted; the J1 row drops out thanks to 2 t Q11 = D.
        Poly w = d * t * v.p1.derivative() + d * v.p1 * Rational(1, 2);
        tp.tp1 = t * v.p1 * v.p1 * xyz_.x_y +
                 t * v.p1 * (d * v.p2.derivative() + v.p2 * xyz_.y_y + v.p3 * xyz_.z_y) -
                 w * v.p2;
        tp.tp2 = t * v.p1 * v.p1 * xyz_.x_z +
                 t * v.p1 * (d * v.p3.derivative() + v.p2 * xyz_.y_z + v.p3 * xyz_.z_z) -
                 w * v.p3;
    }
    normalize_primitive({&tp.tp1, &tp.tp2});
    // Canonical sign: the direct branch is linear in the form, so without
    // this a negative rescaling of the input would flip the pair.
    const Poly& lead = tp.tp1.is_zero() ? tp.tp2 : tp.tp1;
    if (!lead.is_zero() && lead.leading().sign() < 0) {
        tp.tp1 = -tp.tp1;
        tp.tp2 = -tp.tp2;
    }
    return tp;
}

RiccatiS BoundEngine::riccati_s(const TildePair& tp) const {
    if (tp.tp1.is_zero())
        throw std::invalid_argument("S is the plain polynomial tp2 when tp1 vanishes");
    const Poly& d = pf_.D;
    Poly mid = d * tp.tp1.derivative() + rw_.a1 * tp.tp1;
    RiccatiS s;
    s.A = rw_.a2;
    s.B = mid - Rational(2) * (rw_.a2 * tp.tp2);
    s.C = rw_.a2 * tp.tp2 * tp.tp2 - mid * tp.tp2 +
          (d * tp.tp2.derivative() + rw_.a0 * tp.tp1) * tp.tp1;
    return s;
}

BoundCertificate BoundEngine::certificate(const PolynomialForm& omega) {
    if (omega.is_zero()) throw std::invalid_argument("certificate of the zero form");

    BoundCertificate cert;
    cert.n = *omega.degree();
    cert.petrov = eng_.reduce_form(omega);

    const int n = cert.n;
    cert.worst_s_bound = (n + 5) + (n / 2 + 2) + 1;
    cert.worst_case_bound = cert.worst_s_bound + n / 4 + 1;
    cert.generic_bound = generic_bound(n);

    if (cert.petrov.is_zero()) {
        cert.zero_integral = true;
        return cert;
    }

    cert.p1_zero = cert.petrov.p1.is_zero();
    cert.tilde = tilde_polys(cert.petrov);
    cert.tp1_zero = cert.tilde.tp1.is_zero();

    if (!cert.tp1_zero) {
        cert.riccati = riccati_s(cert.tilde);
        // Roots of tp1 split (0, 1/64) into k_intervals pieces.  Inside each
        // piece consecutive zeros of S sandwich a zero of C, so the count is
        // at most (zeros of C there) + 1 per piece; summing gives at most
        // (all C-roots) + k_intervals.
        cert.k_intervals = sturm_count(cert.tilde.tp1, domain_) + 1;
        if (cert.riccati.C.is_zero()) {
            // Unreachable for genuine integrals (S would be constant on each
            // piece yet tends to a finite limit pattern incompatible with
            // that); keep the certificate honest rather than crash.
            cert.c_zero = true;
            cert.lambda_total = 0;
        } else {
            cert.lambda_total = sturm_count(cert.riccati.C, domain_);
        }
        cert.s_zero_bound = cert.lambda_total + cert.k_intervals;
    } else {
        // S collapsed to the polynomial tp2 (times J3 > 0): count directly.
        // tp2 == 0 too would mean I is a constant multiple of p1 sqrt(t),
        // impossible for independent basis integrals, but stay total.
        cert.s_zero_bound =
            cert.tilde.tp2.is_zero() ? 0 : sturm_count(cert.tilde.tp2, domain_);
    }

    if (!cert.p1_zero) {
        // Zeros of I itself: between consecutive ones, I/(p1 sqrt(t)) has a
        // critical point or p1 vanishes, giving one extra per p1-cut piece.
        cert.l_intervals = sturm_count(cert.petrov.p1, domain_) + 1;
        cert.instance_bound = cert.s_zero_bound + cert.l_intervals;
    } else {
        cert.instance_bound = cert.s_zero_bound;
    }
    return cert;
}

Rational BoundEngine::generic_bound(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    return Rational(7 * static_cast<long>(n), 4) + Rational(9);
}

Rational BoundEngine::cycles_bound(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    return Rational(7 * static_cast<long>(n) + 43, 4);
}

} // namespace abelint
