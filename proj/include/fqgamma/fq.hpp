#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fqgamma/errors.hpp"

namespace fqgamma {

// Packed element of F_q, q = p^r: the integer sum(c_i * p^i) where
// (c_0,...,c_{r-1}) are the coordinates in the power basis of the
// generator g (the residue class of the field modulus variable).
using felem = std::uint32_t;

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

// Immutable arithmetic context for F_q = F_p[g]/(modulus).
//
// Multiplication, inversion and powering run through exp/log tables built
// once at construction (a generator of the cyclic group F_q^x is located by
// order checks). Addition works coordinate-wise base p, with an XOR fast
// path in characteristic 2. q is guarded to at most 2^16.
class Fq {
  public:
    // Built-in modulus table: any prime q, and the standard moduli for the
    // non-prime q <= 64. Other non-prime q need the explicit-modulus overload.
    static FqPtr make(std::uint64_t q);
    // Modulus given as ascending coefficient digits over F_p, length r+1, monic.
    static FqPtr make(std::uint64_t p, unsigned r, const std::vector<std::uint32_t>& modulus);
    // Modulus given in the element text grammar, e.g. "g^2+2*g+2" for q=9.
    static FqPtr make(std::uint64_t q, const std::string& modulus_text);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }
    // The class of the modulus variable; requires r > 1.
    felem gen() const;

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;  // domain_error on 0
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, long long e) const;

    // n mod p embedded as a constant.
    felem from_int(long long n) const;

    // Coordinates (c_0,...,c_{r-1}) over F_p.
    std::vector<std::uint32_t> coords(felem a) const;

    // Element text grammar: polynomial in g over F_p, descending powers,
    // e.g. "g^2+2*g", "g+1", "2", "0". Parsing also accepts '-' signs,
    // optional '*', insignificant whitespace, and one enclosing paren pair.
    std::string to_string(felem a) const;
    felem parse_elem(const std::string& text) const;

    // True when the element is 0 or a single power of g with coefficient 1
    // or lies in the prime field; such coefficients print without parens
    // inside polynomial terms.
    bool is_simple_coeff(felem a) const;

    // Canonical context id, e.g. "q=9;mod=g^2+2*g+2". Two contexts with the
    // same key are interchangeable.
    const std::string& key() const { return key_; }
    bool same(const Fq& other) const { return key_ == other.key_; }

  private:
    Fq() = default;
    void build_tables();

    std::uint32_t p_ = 0, r_ = 0, q_ = 0;
    std::vector<std::uint32_t> mod_;  // ascending digits over F_p, monic, degree r
    std::vector<std::uint32_t> exp_;  // exp_[i] = gen^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
    std::string key_;
};

// Shared guard: maximum supported field size.
inline constexpr std::uint64_t kMaxFieldSize = 1ull << 16;

}  // namespace fqgamma
