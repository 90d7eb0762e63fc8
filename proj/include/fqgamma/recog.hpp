#pragma once

#include <optional>

#include "fqgamma/bracket.hpp"
#include "fqgamma/laurent.hpp"

namespace fqgamma {

// A rational function recognized from a truncated series: num/den in the
// inverse variable (theta or eta according to var), in lowest terms with
// monic denominator. Valuation is folded into num/den, so exactly one of
// them may be divisible by the variable.
struct RationalCandidate {
    Poly num, den;
    SeriesVar var = SeriesVar::eta_inv;

    // The candidate re-expanded as a series to absolute precision prec.
    LaurentSeries expand(long prec) const;
    bool operator==(const RationalCandidate& o) const {
        return num == o.num && den == o.den && var == o.var;
    }
    std::string to_string() const;  // "num / den"
};

// Rational reconstruction by the extended Euclidean algorithm: finds
// num/den of degree <= dmax in the series variable whose expansion matches
// every known coefficient of s, or nothing when no such function exists.
// Requires at least 2*dmax+2 known coefficients (precision_error otherwise;
// the surplus beyond 2*dmax+1 makes the match a nontrivial certificate).
std::optional<RationalCandidate> pade_reconstruct(const LaurentSeries& s, int dmax);

struct CertReport {
    bool recognized = false;  // reconstruction succeeded at both precisions
    bool stable = false;      // ... and produced the same candidate
    std::optional<RationalCandidate> candidate;
    long prec_lo = 0, prec_hi = 0;  // eta precisions used
    long long sigma_plus = 0;
};

// Numerically certifies a bracket relation: computes
//   R = prod_a Gamma(rep_a / f)^{m_a} / pi^{sigma_plus}
// in the eta variable at precisions prec and 2*prec and attempts rational
// recognition at degree bound dmax, doubling dmax once if the first attempt
// does not stabilize. The theorem guarantees R is algebraic; recognition
// over F_q(eta) is a checkable sub-case, so a failure here is inconclusive,
// never a refutation. Non-relations are rejected with a domain error naming
// the violating unit.
CertReport certify_relation(const ExponentVector& m, long prec = 80, int dmax = 8);

}  // namespace fqgamma
