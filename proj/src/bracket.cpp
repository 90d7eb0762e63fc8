#include "fqgamma/bracket.hpp"

#include <sstream>

#include "fqgamma/errors.hpp"

namespace fqgamma {

namespace {

Poly reduce_nonzero(const ModCtx& ctx, const Poly& a, const char* what) {
    Poly r = ctx.reduce(a);
    if (r.is_zero())
        throw domain_error(std::string(what) + " lies in the zero class mod " +
                           ctx.modulus().to_string());
    return r;
}

}  // namespace

ExponentVector::ExponentVector(Poly f) : f_(std::move(f)) {
    if (!f_.is_monic() || f_.deg() < 1)
        throw domain_error("exponent-vector modulus must be monic of degree >= 1");
}

ExponentVector ExponentVector::pair_vector(const Poly& a, const Poly& b, const Poly& f) {
    ExponentVector v(f);
    ModCtx ctx(f);
    Poly ra = ctx.reduce(a);
    Poly rb = ctx.reduce(b);
    if (ra == rb) return v;  // zero vector, including the a = b case
    v.add_at(ra, 1);
    v.add_at(rb, -1);
    return v;
}

ExponentVector ExponentVector::parse(const FqPtr& F, const Poly& f, const std::string& text) {
    ExponentVector v(f);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t stop = text.find_first_of(",;", pos);
        std::string part = text.substr(pos, stop == std::string::npos ? std::string::npos
                                                                      : stop - pos);
        pos = stop == std::string::npos ? text.size() + 1 : stop + 1;
        std::size_t lo = part.find_first_not_of(" \t");
        if (lo == std::string::npos) continue;  // empty segment
        std::size_t hi = part.find_last_not_of(" \t");
        part = part.substr(lo, hi - lo + 1);
        std::size_t colon = part.rfind(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == part.size())
            throw domain_error("malformed vector entry '" + part +
                               "' (expected residue:exponent)");
        Poly a = Poly::parse(F, part.substr(0, colon));
        std::string etext = part.substr(colon + 1);
        std::size_t used = 0;
        long long m = 0;
        try {
            m = std::stoll(etext, &used);
        } catch (const std::exception&) {
            throw domain_error("bad exponent '" + etext + "'");
        }
        while (used < etext.size() && (etext[used] == ' ' || etext[used] == '\t')) ++used;
        if (used != etext.size()) throw domain_error("bad exponent '" + etext + "'");
        if (m != 0) v.add_at(a, m);
    }
    return v;
}

void ExponentVector::add_at(const Poly& a, long long m) {
    if (m == 0) return;
    ModCtx ctx(f_);
    Poly r = reduce_nonzero(ctx, a, "vector entry");
    auto it = entries_.find(r.code());
    if (it == entries_.end()) {
        entries_.emplace(r.code(), m);
    } else {
        it->second += m;
        if (it->second == 0) entries_.erase(it);
    }
}

long long ExponentVector::at(const Poly& a) const {
    ModCtx ctx(f_);
    Poly r = ctx.reduce(a);
    auto it = entries_.find(r.code());
    return it == entries_.end() ? 0 : it->second;
}

std::vector<std::pair<Poly, long long>> ExponentVector::entries() const {
    std::vector<std::pair<Poly, long long>> out;
    out.reserve(entries_.size());
    for (const auto& [code, m] : entries_)
        out.emplace_back(Poly::from_code(field(), code), m);
    return out;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (!(f_ == o.f_)) throw domain_error("exponent vectors live on different moduli");
    ExponentVector v = *this;
    for (const auto& [code, m] : o.entries_) {
        auto it = v.entries_.find(code);
        if (it == v.entries_.end()) {
            v.entries_.emplace(code, m);
        } else {
            it->second += m;
            if (it->second == 0) v.entries_.erase(it);
        }
    }
    return v;
}

ExponentVector ExponentVector::operator-() const {
    ExponentVector v = *this;
    for (auto& [code, m] : v.entries_) m = -m;
    return v;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const { return *this + (-o); }

bool ExponentVector::operator==(const ExponentVector& o) const {
    return f_ == o.f_ && entries_ == o.entries_;
}

long long ExponentVector::sigma_plus() const {
    long long s = 0;
    for (const auto& [code, m] : entries_)
        if (Poly::from_code(field(), code).is_monic()) s += m;
    return s;
}

ExponentVector ExponentVector::acted(const Poly& u) const {
    ModCtx ctx(f_);
    Poly ru = reduce_nonzero(ctx, u, "acting element");
    if (!(gcd(ru, f_) == Poly::one(field())))
        throw domain_error("acting element " + ru.to_string() + " is not a unit mod " +
                           f_.to_string());
    ExponentVector v(f_);
    for (const auto& [code, m] : entries_)
        v.add_at(ctx.mul(ru, Poly::from_code(field(), code)), m);
    return v;
}

ExponentVector ExponentVector::lifted(const Poly& F) const {
    Poly rem = F % f_;
    if (!F.is_monic() || !rem.is_zero())
        throw domain_error("lift target must be a monic multiple of the modulus");
    Poly h = F / f_;
    ExponentVector v(F);
    for (const auto& [code, m] : entries_)
        v.add_at(Poly::from_code(field(), code) * h, m);
    return v;
}

std::string ExponentVector::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [code, m] : entries_) {
        if (!first) os << ",";
        first = false;
        os << Poly::from_code(field(), code).to_string() << ":" << m;
    }
    return os.str();
}

BracketCheck is_bracket_relation(const ExponentVector& m) {
    if (m.is_zero()) return BracketCheck{true, 0, std::nullopt};
    UnitGroup units(m.modulus());
    return is_bracket_relation(m, units);
}

BracketCheck is_bracket_relation(const ExponentVector& m, const UnitGroup& units) {
    BracketCheck out;
    out.sigma_plus = m.sigma_plus();
    if (m.is_zero()) {
        out.is_relation = true;
        return out;
    }
    if (units.modulus() != m.modulus())
        throw domain_error("unit group modulus does not match the exponent vector");
    ModCtx ctx(m.modulus());
    const FqPtr& F = m.modulus().field();
    auto reps = m.entries();
    // A scalar c only rescales leading coefficients: c*x is monic iff
    // lc(x) = c^-1. One weighted lc-histogram per monic unit u therefore
    // yields sigma+ for its entire scalar coset {c*u : c in Fq^x}, and the
    // monic units hit every coset exactly once.
    std::vector<long long> hist(F->q(), 0);
    for (const Poly& u : units.units()) {
        if (!u.is_monic()) continue;
        std::fill(hist.begin(), hist.end(), 0);
        for (const auto& [a, e] : reps) hist[ctx.mul(u, a).lc()] += e;
        for (felem c = 1; c < F->q(); ++c) {
            if (hist[F->inv(c)] != out.sigma_plus) {
                out.witness = ctx.reduce(u.scaled(c));
                return out;
            }
        }
    }
    out.is_relation = true;
    return out;
}

ExponentVector translation_vector(const Poly& a, const Poly& b, const Poly& f) {
    return ExponentVector::pair_vector(a + b * f, a, f);
}

ExponentVector reflection_vector(const Poly& a, const Poly& f) {
    ModCtx ctx(f);
    Poly ra = reduce_nonzero(ctx, a, "reflection argument");
    const FqPtr& F = f.field();
    ExponentVector v(f);
    for (felem c = 1; c < F->q(); ++c) v.add_at(ctx.reduce(ra.scaled(c)), 1);
    return v;
}

ExponentVector gauss_vector(const Poly& a, const Poly& f, const Poly& g) {
    const FqPtr& F = f.field();
    if (!g.is_monic() || g.deg() < 1)
        throw domain_error("gauss twist must be monic of degree >= 1");
    ModCtx fctx(f);
    Poly ra = reduce_nonzero(fctx, a, "gauss argument");
    Poly M = f * g;
    ExponentVector v(M);
    for (const Poly& alpha : enumerate_below_deg(F, g.deg()))
        v.add_at(ra + alpha * f, 1);
    v.add_at(ra * g, -1);
    return v;
}

}  // namespace fqgamma
