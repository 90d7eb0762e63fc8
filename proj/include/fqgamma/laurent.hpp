#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fqgamma/poly.hpp"

namespace fqgamma {

// Which completion the series lives in. theta_inv: F_q((1/theta)), the base
// completion at the infinite place. eta_inv: F_q((1/eta)) where eta is a
// fixed (q-1)-st root of -theta, so theta = -eta^(q-1); this is the totally
// ramified degree-(q-1) extension where the period lives.
enum class SeriesVar { theta_inv, eta_inv };

std::string var_name(SeriesVar v);  // "1/theta" / "1/eta"

// Truncated Laurent series over F_q in w = 1/theta or 1/eta, with an
// absolute precision cutoff: coefficients at exponents >= prec() are
// unknown. The known window is stored densely from min_exp with nonzero
// first and last entries; an empty window means "zero to precision".
//
// Precision propagates exactly in the non-archimedean model:
//   add/sub : min(Pa, Pb)
//   mul     : min(Pa + v(b), Pb + v(a))   (v = valuation; prec for a window
//             that is zero to precision)
//   invert  : Pa - 2 v(a), i.e. relative precision is preserved
//   a -> a^q: q * Pa (coefficientwise Frobenius is exact in char p)
class LaurentSeries {
  public:
    LaurentSeries() = default;

    static LaurentSeries zero(FqPtr F, SeriesVar v, long prec);
    static LaurentSeries one(const FqPtr& F, SeriesVar v, long prec);
    static LaurentSeries monomial(const FqPtr& F, SeriesVar v, felem c, long exp, long prec);
    // P(theta) (resp. P(eta)) as a series in w: theta^i contributes at
    // exponent -i. Coefficients at exponents >= prec are dropped.
    static LaurentSeries from_poly(const Poly& P, SeriesVar v, long prec);
    static LaurentSeries from_terms(FqPtr F, SeriesVar v,
                                    const std::vector<std::pair<long, felem>>& terms, long prec);

    const FqPtr& field() const { return F_; }
    SeriesVar var() const { return var_; }
    long prec() const { return prec_; }
    bool is_zero_to_prec() const { return c_.empty(); }

    long valuation() const;     // domain_error when zero to precision
    felem leading_coeff() const;
    // Coefficient at exponent e; precision_error when e >= prec().
    felem coeff_at(long e) const;
    // Known nonzero terms, ascending exponents.
    std::vector<std::pair<long, felem>> terms() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries operator*(const LaurentSeries& o) const;

    LaurentSeries scaled(felem c) const;           // exact scalar multiple
    LaurentSeries shifted(long k) const;           // * w^k (exact)
    LaurentSeries invert() const;                  // domain_error on zero-to-prec
    LaurentSeries pow_int(long e) const;
    // q^k-power via exponent stretch; multiplies precision by q^k.
    LaurentSeries frobenius(unsigned k = 1) const;
    LaurentSeries truncated(long new_prec) const;  // new_prec <= prec required

    // Reinterpret a theta_inv series in F_q((1/eta)) via theta = -eta^(q-1):
    // the term a * w_theta^j maps to a * (-1)^j * w_eta^(j(q-1)).
    LaurentSeries embed_eta() const;

    std::string to_string() const;  // diagnostic, e.g. "w^-2+2*w+O(w^9)"

  private:
    void normalize();
    FqPtr F_;
    SeriesVar var_ = SeriesVar::theta_inv;
    long min_exp_ = 0;
    std::vector<felem> c_;
    long prec_ = 0;
};

// True when a and b agree coefficientwise below cutoff n; precision_error if
// either side knows less than that.
bool eq_to_prec(const LaurentSeries& a, const LaurentSeries& b, long n);

}  // namespace fqgamma
