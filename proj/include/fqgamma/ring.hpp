#pragma once

#include <cstdint>
#include <vector>

#include "fqgamma/poly.hpp"

namespace fqgamma {

// Arithmetic in A/(f) for monic nonconstant f. Residues are carried as their
// canonical representatives: the remainder mod f, of degree < deg f.
class ModCtx {
  public:
    explicit ModCtx(Poly f);

    const Poly& modulus() const { return f_; }
    const FqPtr& field() const { return f_.field(); }

    Poly reduce(const Poly& a) const { return a % f_; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % f_; }
    Poly add(const Poly& a, const Poly& b) const { return (a + b) % f_; }
    Poly sub(const Poly& a, const Poly& b) const { return (a - b) % f_; }

    // Number of residues q^{deg f}; throws guard_error past the enumeration guard.
    std::uint64_t size() const;

    // A residue class is called monic when its canonical representative is
    // monic. The zero class is not monic.
    bool is_monic_class(const Poly& a) const { return reduce(a).is_monic(); }

  private:
    Poly f_;
};

// The unit group (A/(f))^x, fully enumerated in base-q counter order.
// Positions in units() index everything downstream (witness order, coset
// representatives), so the order is part of the contract.
class UnitGroup {
  public:
    explicit UnitGroup(Poly f);

    const ModCtx& ring() const { return ring_; }
    const Poly& modulus() const { return ring_.modulus(); }
    const std::vector<Poly>& units() const { return units_; }
    std::size_t size() const { return units_.size(); }

    // Position of a reduced residue in units(); -1 when not a unit.
    long index_of(const Poly& reduced) const;
    bool is_unit(const Poly& reduced) const { return index_of(reduced) >= 0; }

  private:
    ModCtx ring_;
    std::vector<Poly> units_;
    std::vector<std::int32_t> index_;  // by residue code
};

}  // namespace fqgamma
