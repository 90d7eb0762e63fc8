#include "fqgamma/ring.hpp"

namespace fqgamma {

ModCtx::ModCtx(Poly f) : f_(std::move(f)) {
    if (f_.deg() < 1) throw domain_error("modulus must be nonconstant");
    if (!f_.is_monic()) throw domain_error("modulus must be monic: " + f_.to_string());
}

std::uint64_t ModCtx::size() const {
    std::uint64_t n = 1;
    for (int i = 0; i < f_.deg(); ++i) {
        n *= field()->q();
        if (n > kMaxEnumeration) throw guard_error("residue ring size exceeds the configured guard");
    }
    return n;
}

UnitGroup::UnitGroup(Poly f) : ring_(std::move(f)) {
    const std::uint64_t n = ring_.size();
    const Poly& m = ring_.modulus();
    index_.assign(n, -1);
    for (std::uint64_t code = 0; code < n; ++code) {
        Poly a = Poly::from_code(m.field(), code);
        if (gcd(a, m).is_one()) {
            index_[code] = static_cast<std::int32_t>(units_.size());
            units_.push_back(std::move(a));
        }
    }
}

long UnitGroup::index_of(const Poly& reduced) const {
    const std::uint64_t code = reduced.code();
    if (code >= index_.size()) throw domain_error("residue is not reduced mod " + modulus().to_string());
    return index_[code];
}

}  // namespace fqgamma
