#pragma once

#include <map>
#include <optional>
#include <string>

#include "fqgamma/ring.hpp"

namespace fqgamma {

// An integer exponent vector on the nonzero residue classes mod f: the
// combinatorial shadow of a product prod_a Gamma(a/f)^(m_a). Entries are
// keyed by the canonical representative (degree < deg f); zero exponents are
// never stored. Iteration order is the base-q counter order on residues.
class ExponentVector {
  public:
    explicit ExponentVector(Poly f);

    // e_a - e_b for the classes of a and b; the zero vector when a = b mod f.
    static ExponentVector pair_vector(const Poly& a, const Poly& b, const Poly& f);
    // CLI grammar: comma-separated "residue:exponent" pairs, e.g.
    // "1:1,t+1:-2" (semicolons also accepted). Residues are reduced mod f;
    // repeats accumulate.
    static ExponentVector parse(const FqPtr& F, const Poly& f, const std::string& text);

    const Poly& modulus() const { return f_; }
    const FqPtr& field() const { return f_.field(); }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    // Adds m at the class of a (reduced mod f); the zero class is rejected.
    void add_at(const Poly& a, long long m);
    long long at(const Poly& a) const;
    // (residue, exponent) pairs in enumeration order.
    std::vector<std::pair<Poly, long long>> entries() const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;
    ExponentVector operator-() const;
    bool operator==(const ExponentVector& o) const;

    // Sum of the exponents sitting at monic canonical representatives.
    long long sigma_plus() const;
    // The unit action (u * m)_{u a} = m_a; u must be a unit mod f.
    ExponentVector acted(const Poly& u) const;

    // Entries transported to the modulus F = f * h via a -> a * (F/f) mod F.
    ExponentVector lifted(const Poly& F) const;

    std::string to_string() const;

  private:
    Poly f_;
    std::map<std::uint64_t, long long> entries_;  // residue code -> exponent
};

struct BracketCheck {
    bool is_relation = false;
    long long sigma_plus = 0;          // of the input vector
    std::optional<Poly> witness;       // first unit breaking invariance
};

// Decides whether sigma_plus is invariant under the action of every unit
// mod f (enumerated in counter order; the first violator is the witness).
// When it is, the corresponding Gamma monomial is a period power times an
// algebraic factor, with the period exponent sigma_plus.
BracketCheck is_bracket_relation(const ExponentVector& m);
// Same decision against a caller-held unit group (must match m's modulus);
// lets bulk scans over one modulus skip rebuilding the group per vector.
BracketCheck is_bracket_relation(const ExponentVector& m, const UnitGroup& units);

// The three functional-equation families as exponent vectors.
// Translation: Gamma(r + b) ~ Gamma(r) contributes e_a - e_a = 0.
ExponentVector translation_vector(const Poly& a, const Poly& b, const Poly& f);
// Reflection: sum over c in F_q^x of e_{c a}; requires a nonzero mod f.
ExponentVector reflection_vector(const Poly& a, const Poly& f);
// Gauss: sum over deg alpha < deg g of e_{a + alpha f} minus e_{a g}, on the
// modulus f g; requires a nonzero mod f and g monic nonconstant.
ExponentVector gauss_vector(const Poly& a, const Poly& f, const Poly& g);

}  // namespace fqgamma
