#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqgamma/bracket.hpp"
#include "fqgamma/ring.hpp"

namespace fqgamma {

// Structure of the CM t-module attached to a monic nonconstant conductor f:
// its dimension/rank data, the stabilizer F(1) of the monic cone, and the
// partition of the monic units into F(1)-cosets. Two classes of Gamma values
// at arguments a/f, b/f (a, b monic units) agree up to algebraic multiples
// exactly when a and b land in the same coset.
struct Classification {
    Poly f;
    std::vector<Poly> monic_units;           // I_+ in counter order
    std::vector<Poly> stabilizer;            // F(1) = {s : u s monic for all u in I_+}
    long long m = 0;                         // |F(1)|; the module splits as H^m
    bool simple = false;                     // m == 1
    long long dim_E = 0;                     // |I_+|
    long long rank_E = 0;                    // (q - 1) |I_+|
    long long dim_H = 0;                     // dim_E / m
    long long rank_H = 0;                    // rank_E / m
    long long n_quasiperiods = 0;            // rank_E - dim_E
    std::vector<std::vector<Poly>> classes;  // F(1)-cosets of I_+, each sorted,
                                             // ordered by least element
};

Classification classify(const Poly& f);

// Whether Gamma(a/f) and Gamma(b/g) agree up to an algebraic multiple. Both
// fractions are put in lowest terms (integral arguments are rejected); then
// over M = lcm of the reduced denominators, every unit u mod M must make the
// two products monic together. Decided combinatorially, no series involved.
bool approx_equiv(const Poly& a, const Poly& f, const Poly& b, const Poly& g);

struct IsogenyResult {
    bool isogenous = false;
    std::optional<Poly> witness;  // b with Gamma(1/f) ~ Gamma(b/g), if any
};

// Whether the CM modules of f and g are isogenous, i.e. Gamma(1/f) agrees
// with some Gamma(b/g) up to an algebraic multiple. Dimension and rank are
// isogeny invariants, so mismatches short-circuit the search.
IsogenyResult isogenous(const Poly& f, const Poly& g);

// The unit sum S = sum of the monic units mod f, reduced mod f, against its
// closed form prod_i (1 - f_i) taken over the distinct irreducible factors.
// Defined for q > 2 only (the monic polynomials of each positive degree sum
// to zero only when q > 2). When no f_i divides any f_j - 1 the sum is
// coprime to f, which forces the stabilizer trivial and the module simple.
struct UnitSumReport {
    Poly s_direct;        // sum over I_+, reduced mod f
    Poly s_product;       // prod (1 - f_i) reduced mod f
    bool agree = false;   // s_direct == s_product (always true when q > 2)
    bool exact = false;   // s_direct equals the unreduced product as polynomials
    bool coprime = false; // gcd(s_direct, f) = 1
    bool hypothesis = false;  // no f_i divides any f_j - 1
};

// `factors` must list the distinct monic irreducible factors of f (any
// order, no repeats); multiplicities are recovered by division. Pass an
// empty list to have them computed.
UnitSumReport unit_sum_report(const Poly& f, std::vector<Poly> factors = {});

}  // namespace fqgamma
