#include "fqgamma/recog.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fqgamma/special_values.hpp"

namespace fqgamma {

namespace {

// x^{deg p} * p(1/x): coefficient reversal at the exact degree.
Poly reversed(const Poly& p) {
    std::vector<felem> cc(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly::from_coeffs(p.field(), std::move(cc));
}

Poly x_power(const FqPtr& F, long e) {
    std::vector<felem> cc(static_cast<std::size_t>(e) + 1, 0);
    cc.back() = 1;
    return Poly::from_coeffs(F, std::move(cc));
}

}  // namespace

LaurentSeries RationalCandidate::expand(long prec) const {
    if (!num.field()) throw domain_error("candidate is missing its field context");
    if (den.is_zero()) throw domain_error("candidate has a zero denominator");
    if (num.is_zero()) return LaurentSeries::zero(num.field(), var, prec);
    // Pad so the quotient still knows prec coefficients after the inversion
    // loses 2*deg(den) of absolute precision.
    const long pad = prec + 2L * den.deg() + num.deg() + 4;
    LaurentSeries n = LaurentSeries::from_poly(num, var, pad);
    LaurentSeries d = LaurentSeries::from_poly(den, var, pad);
    return (n * d.invert()).truncated(prec);
}

std::string RationalCandidate::to_string() const {
    const std::string x = var == SeriesVar::eta_inv ? "eta" : "theta";
    return "(" + num.to_string() + ") / (" + den.to_string() + ") in " + x;
}

std::optional<RationalCandidate> pade_reconstruct(const LaurentSeries& s, int dmax) {
    if (dmax < 0) throw domain_error("reconstruction degree bound must be nonnegative");
    if (s.is_zero_to_prec())
        throw domain_error("cannot reconstruct from a series that is zero to its precision");
    const FqPtr& F = s.field();
    const long v = s.valuation();
    const long rel = s.prec() - v;
    const long K = 2L * dmax + 1;
    if (rel < K + 1)
        throw precision_error("rational reconstruction at degree bound " + std::to_string(dmax) +
                              " needs " + std::to_string(K + 1) +
                              " known coefficients, series carries " + std::to_string(rel));

    // Extended Euclid on (x^K, first K normalized coefficients), tracking
    // only the second cofactor. Stopping at the first remainder of degree
    // <= dmax bounds the cofactor degree by K - (dmax+1) = dmax.
    std::vector<felem> tc(static_cast<std::size_t>(K));
    for (long j = 0; j < K; ++j) tc[static_cast<std::size_t>(j)] = s.coeff_at(v + j);
    Poly r_prev = x_power(F, K);
    Poly r_cur = Poly::from_coeffs(F, std::move(tc));
    Poly t_prev = Poly::zero(F);
    Poly t_cur = Poly::one(F);
    while (r_cur.deg() > dmax) {
        auto qr = r_prev.divmod(r_cur);
        Poly t_next = t_prev - qr.first * t_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(qr.second);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    // r_cur = t_cur * T mod x^K. A vanishing constant term in the cofactor
    // means no power-series quotient interpolates the window.
    if (r_cur.is_zero() || t_cur.coeff(0) == 0) return std::nullopt;
    // Any common factor of the pair divides x^K; with t_cur(0) != 0 it is
    // trivial, so this division is a no-op kept as a consistency guard.
    Poly g = gcd(r_cur, t_cur);
    if (!g.is_one()) {
        r_cur = r_cur / g;
        t_cur = t_cur / g;
    }

    // s matches w^v P(w)/Q(w); substituting w = 1/x turns that into
    // x^{deg Q - deg P - v} * revP(x)/revQ(x), and the x-power folds into
    // whichever side keeps numerator and denominator coprime.
    RationalCandidate c;
    c.var = s.var();
    c.num = reversed(r_cur);
    c.den = reversed(t_cur);
    const long k = static_cast<long>(t_cur.deg()) - r_cur.deg() - v;
    if (k > 0)
        c.num = c.num * x_power(F, k);
    else if (k < 0)
        c.den = c.den * x_power(F, -k);
    if (!gcd(c.num, c.den).is_one())
        throw std::logic_error("rational reconstruction produced a reducible candidate");
    const felem lead = c.den.lc();
    if (lead != 1) {
        c.num = c.num.scaled(F->inv(lead));
        c.den = c.den.monic();
    }
    // Euclid only interpolated the window; the candidate stands only if it
    // reproduces every known coefficient.
    if (!eq_to_prec(c.expand(s.prec()), s, s.prec())) return std::nullopt;
    return c;
}

namespace {

// R = prod_a Gamma(rep_a/f)^{m_a} * pi^{-sigma} as an eta series carrying
// rel_target meaningful coefficients. Every factor is computed with two
// guard coefficients beyond the target so the product truncates cleanly.
LaurentSeries relation_ratio(const ExponentVector& m, long long sigma, long rel_target) {
    const FqPtr& F = m.field();
    const long q = F->q();
    const long rel = rel_target + 2;
    const long theta_rel = (rel + q - 2) / (q - 1);  // ceil(rel / (q-1))
    LaurentSeries acc = carlitz_period(F, rel - q).pow_int(static_cast<long>(-sigma));
    for (const auto& [a, e] : m.entries()) {
        const RationalArg z = RationalArg::make(a, m.modulus());
        const long gamma_prec = z.num.deg() - z.den.deg() + theta_rel;
        acc = acc * gamma(z, gamma_prec).series.embed_eta().pow_int(static_cast<long>(e));
    }
    return acc.truncated(acc.valuation() + rel_target);
}

}  // namespace

CertReport certify_relation(const ExponentVector& m, long prec, int dmax) {
    if (prec < 2) throw domain_error("certification precision must be at least 2");
    if (dmax < 0) throw domain_error("certification degree bound must be nonnegative");
    const BracketCheck chk = is_bracket_relation(m);
    if (!chk.is_relation) {
        std::string msg = "not a bracket relation: sigma_plus is not unit-invariant";
        if (chk.witness) msg += " (violating unit u = " + chk.witness->to_string() + ")";
        throw domain_error(msg);
    }

    CertReport rep;
    rep.sigma_plus = chk.sigma_plus;
    rep.prec_lo = prec;
    rep.prec_hi = 2 * prec;
    auto attempt = [&](long rel_target) -> std::optional<RationalCandidate> {
        const LaurentSeries R = relation_ratio(m, chk.sigma_plus, rel_target);
        if (auto c = pade_reconstruct(R, dmax)) return c;
        try {
            return pade_reconstruct(R, 2 * dmax);  // widen the bound once
        } catch (const precision_error&) {
            return std::nullopt;  // too few coefficients for the wider bound
        }
    };
    std::optional<RationalCandidate> lo = attempt(rep.prec_lo);
    std::optional<RationalCandidate> hi = attempt(rep.prec_hi);
    rep.recognized = lo.has_value() && hi.has_value();
    rep.stable = rep.recognized && *lo == *hi;
    rep.candidate = hi.has_value() ? std::move(hi) : std::move(lo);
    return rep;
}

}  // namespace fqgamma
