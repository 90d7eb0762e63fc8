#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqgamma/fq.hpp"

namespace fqgamma {

// Dense univariate polynomial over F_q in the variable t (the operator-side
// indeterminate). Coefficients ascending; no trailing zeros, so the zero
// polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FqPtr F) : F_(std::move(F)) {}

    static Poly zero(FqPtr F) { return Poly(std::move(F)); }
    static Poly one(FqPtr F);
    static Poly constant(FqPtr F, felem c);
    static Poly var(FqPtr F);  // t
    static Poly from_coeffs(FqPtr F, std::vector<felem> coeffs);
    // Text grammar, e.g. "t^2+2*t", "(g+1)*t^2+g", "t^3-t". See to_string.
    static Poly parse(const FqPtr& F, const std::string& text);

    const FqPtr& field() const { return F_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    felem lc() const;                 // leading coefficient; domain_error on 0
    felem coeff(int i) const { return (i >= 0 && i <= deg()) ? c_[i] : 0; }
    const std::vector<felem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }

    Poly scaled(felem c) const;       // c * this
    Poly monic() const;               // scaled by lc^-1; domain_error on 0
    Poly pow(unsigned e) const;
    // Exponent stretch ("multiply every exponent by k"). Because F_q
    // coefficients are fixed by the q-power Frobenius, stretch(q) equals
    // the q-th power of the polynomial.
    Poly stretch(unsigned k) const;

    // Base-q counter code sum(index(c_i) * q^i); guards against overflow.
    std::uint64_t code() const;
    static Poly from_code(const FqPtr& F, std::uint64_t code);

    std::string to_string() const;

  private:
    void trim();
    FqPtr F_;
    std::vector<felem> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic unless both zero
Poly lcm(const Poly& a, const Poly& b);  // monic unless either zero

// All q^d polynomials of degree < d, in base-q counter order (the constant
// coefficient is the least significant digit).
std::vector<Poly> enumerate_below_deg(const FqPtr& F, int d);
// Monic polynomials of degree exactly d, counter order on the lower part.
std::vector<Poly> enumerate_monics(const FqPtr& F, int d);

bool is_irreducible(const Poly& f);  // trial division; deg >= 1 required

// Trial-division factorization into monic irreducibles with multiplicity,
// smallest factors first (by degree, then counter order). The unit is
// discarded: factor(c * f) of a nonzero input lists the monic factors of f.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

// Shared guard: maximum number of residues/polynomials any operation will
// enumerate (unit groups, residue scans).
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

}  // namespace fqgamma
