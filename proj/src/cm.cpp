#include "fqgamma/cm.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqgamma/errors.hpp"
#include "fqgamma/special_values.hpp"

namespace fqgamma {

namespace {

// a/f in lowest terms with the numerator reduced mod the denominator; the
// equivalence class of Gamma(a/f) only depends on that normal form.
std::pair<Poly, Poly> reduced_point(const Poly& a, const Poly& f) {
    RationalArg r = RationalArg::make(a, f);
    if (r.is_integral())
        throw domain_error("argument " + r.to_string() +
                           " is integral; equivalence compares fractional arguments");
    return {r.num % r.den, r.den};
}

}  // namespace

Classification classify(const Poly& f) {
    ModCtx ctx(f);
    UnitGroup units(f);
    Classification out;
    out.f = ctx.modulus();

    for (const Poly& u : units.units())
        if (u.is_monic()) out.monic_units.push_back(u);

    // s stabilizes the monic cone iff u s stays monic for every monic unit u;
    // the u = 1 case already forces s itself monic.
    for (const Poly& s : out.monic_units) {
        bool stable = true;
        for (const Poly& u : out.monic_units)
            if (!ctx.mul(u, s).is_monic()) {
                stable = false;
                break;
            }
        if (stable) out.stabilizer.push_back(s);
    }

    out.dim_E = static_cast<long long>(out.monic_units.size());
    out.rank_E = static_cast<long long>(units.units().size());
    out.m = static_cast<long long>(out.stabilizer.size());
    out.simple = out.m == 1;
    if (out.m <= 0 || out.dim_E % out.m != 0 ||
        out.rank_E != (static_cast<long long>(ctx.field()->q()) - 1) * out.dim_E)
        throw std::logic_error("monic-cone stabilizer is not acting freely");
    out.dim_H = out.dim_E / out.m;
    out.rank_H = out.rank_E / out.m;
    out.n_quasiperiods = out.rank_E - out.dim_E;

    // Multiplication by the stabilizer partitions the monic units into cosets
    // of size m; the least unassigned element (counter order) opens each one.
    std::vector<bool> assigned(out.monic_units.size(), false);
    for (std::size_t i = 0; i < out.monic_units.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<Poly> coset;
        for (const Poly& s : out.stabilizer) {
            Poly b = ctx.mul(out.monic_units[i], s);
            auto it = std::lower_bound(out.monic_units.begin(), out.monic_units.end(), b,
                                       [](const Poly& x, const Poly& y) {
                                           return x.code() < y.code();
                                       });
            if (it == out.monic_units.end() || !(*it == b))
                throw std::logic_error("coset left the monic units");
            assigned[static_cast<std::size_t>(it - out.monic_units.begin())] = true;
            coset.push_back(b);
        }
        std::sort(coset.begin(), coset.end(),
                  [](const Poly& x, const Poly& y) { return x.code() < y.code(); });
        out.classes.push_back(std::move(coset));
    }
    return out;
}

bool approx_equiv(const Poly& a, const Poly& f, const Poly& b, const Poly& g) {
    auto [ra, rf] = reduced_point(a, f);
    auto [rb, rg] = reduced_point(b, g);
    ModCtx fctx(rf);
    ModCtx gctx(rg);
    Poly M = lcm(rf, rg);
    UnitGroup units(M);
    for (const Poly& u : units.units())
        if (fctx.mul(u, ra).is_monic() != gctx.mul(u, rb).is_monic()) return false;
    return true;
}

IsogenyResult isogenous(const Poly& f, const Poly& g) {
    Classification cf = classify(f);
    Classification cg = classify(g);
    IsogenyResult out;
    if (cf.dim_H != cg.dim_H || cf.rank_H != cg.rank_H) return out;
    Poly one = Poly::one(f.field());
    for (const Poly& b : cg.monic_units)
        if (approx_equiv(one, cf.f, b, cg.f)) {
            out.isogenous = true;
            out.witness = b;
            return out;
        }
    return out;
}

UnitSumReport unit_sum_report(const Poly& f, std::vector<Poly> factors) {
    ModCtx ctx(f);
    const FqPtr& F = f.field();
    if (F->q() == 2)
        throw domain_error("unit sum analysis requires q > 2 "
                           "(monic sums of fixed positive degree vanish only then)");

    if (factors.empty()) {
        for (const auto& [p, e] : factor(ctx.modulus())) factors.push_back(p);
    } else {
        Poly rest = ctx.modulus();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const Poly& p = factors[i];
            if (!p.is_monic() || p.deg() < 1 || !is_irreducible(p))
                throw domain_error("factor " + p.to_string() + " is not monic irreducible");
            for (std::size_t j = 0; j < i; ++j)
                if (factors[j] == p)
                    throw domain_error("factor " + p.to_string() + " listed twice");
            if (!(rest % p).is_zero())
                throw domain_error("factor " + p.to_string() + " does not divide " +
                                   ctx.modulus().to_string());
            while ((rest % p).is_zero()) rest = rest / p;
        }
        if (!(rest == Poly::one(F)))
            throw domain_error("factor list misses a divisor of " + ctx.modulus().to_string());
    }

    UnitSumReport out;
    Poly s = Poly::zero(F);
    UnitGroup units(ctx.modulus());
    for (const Poly& u : units.units())
        if (u.is_monic()) s = s + u;
    out.s_direct = ctx.reduce(s);

    Poly prod = Poly::one(F);
    for (const Poly& p : factors) prod = prod * (Poly::one(F) - p);
    out.s_product = ctx.reduce(prod);
    out.agree = out.s_direct == out.s_product;
    out.exact = out.s_direct == prod;
    out.coprime = gcd(out.s_direct, ctx.modulus()) == Poly::one(F);

    out.hypothesis = true;
    for (const Poly& p : factors)
        for (const Poly& r : factors)
            if (((r - Poly::one(F)) % p).is_zero()) out.hypothesis = false;
    return out;
}

}  // namespace fqgamma
