#pragma once

#include <vector>

#include "fqgamma/laurent.hpp"

namespace fqgamma {

// A rational function-field argument z = num/den, stored reduced with monic
// denominator. den may reduce to 1, in which case z lies in A itself (the
// Gamma function is still defined there away from its poles).
struct RationalArg {
    Poly num, den;

    // Validates, reduces by the gcd, and normalizes den to monic (scaling num
    // accordingly). den must be nonzero.
    static RationalArg make(Poly num, Poly den);

    bool is_integral() const { return den.is_one(); }
    bool is_zero() const { return num.is_zero(); }
    // True when z is a pole of Gamma: z = 0 or z = -n for monic n.
    bool is_gamma_pole() const;
    std::string to_string() const;
};

// A certified Gamma evaluation: the series, the partial-product cutoff
// degree it was computed at, and the first degree from which successive
// cutoffs agreed at the requested precision.
struct GammaValue {
    RationalArg arg;
    LaurentSeries series;  // theta_inv
    int cutoff = 0;
    int stabilized_at = 0;
};

// Partial product (1/z) * prod over monic n with deg n <= D of (1 + z/n)^{-1},
// computed exactly (polynomial numerator and denominator, one series
// division) to absolute precision prec. Throws domain_error at poles.
LaurentSeries gamma_partial(const RationalArg& z, int D, long prec);

// Adaptive Gamma evaluation: raises the cutoff D until three successive
// partial products agree below prec, then returns the deepest one. Results
// are memoized per (field, reduced argument, precision) process-wide.
// Throws guard_error if D would exceed the ceiling.
GammaValue gamma(const RationalArg& z, long prec, int ceiling = 40);

// The Carlitz period as a series in 1/eta with eta^(q-1) = -theta fixed:
//   pi = theta * eta * prod_{i>=1} (1 - theta^(1-q^i))^{-1},
// of valuation -q, computed to absolute precision prec.
LaurentSeries carlitz_period(const FqPtr& F, long prec);

// Coefficients c_0..c_n of the Carlitz exponential e_C(x) = sum c_i x^(q^i),
// as series in 1/theta at absolute precision prec. c_0 = 1 and
// c_i = c_{i-1}^q / (theta^(q^i) - theta); each c_i is exactly 1/D_i for an
// explicit monic D_i in A.
std::vector<LaurentSeries> carlitz_exp_coeffs(const FqPtr& F, int n, long prec);

// The exact denominator D_i with c_i = 1/D_i.
Poly carlitz_exp_denominator(const FqPtr& F, int i);

// e_C(z) summed until the term valuations have become strictly increasing
// and exceed prec; domain/guard errors when that never happens within the
// index ceiling. Works in the variable of z (coefficients are embedded when
// z lives in the eta completion).
LaurentSeries carlitz_exp(const LaurentSeries& z, long prec, int index_ceiling = 64);

// prod over c in F_q^x of Gamma(c z), to absolute precision prec.
LaurentSeries reflection_product(const RationalArg& z, long prec);

// prod over alpha with deg alpha < deg g of Gamma((a + alpha f)/(f g)), for
// z = a/f and monic nonconstant g, to absolute precision prec.
LaurentSeries gauss_product(const RationalArg& z, const Poly& g, long prec);

}  // namespace fqgamma
