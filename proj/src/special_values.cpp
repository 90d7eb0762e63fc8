#include "fqgamma/special_values.hpp"

#include <map>
#include <mutex>

namespace fqgamma {

RationalArg RationalArg::make(Poly num, Poly den) {
    if (!num.field() || !den.field()) throw domain_error("argument is missing its field context");
    if (den.is_zero()) throw domain_error("zero denominator in rational argument");
    if (!num.is_zero()) {
        Poly g = gcd(num, den);
        num = num / g;
        den = den / g;
    } else {
        den = Poly::one(den.field());
    }
    const felem lead = den.lc();
    if (lead != 1) {
        const felem inv = den.field()->inv(lead);
        den = den.scaled(inv);
        num = num.scaled(inv);
    }
    return RationalArg{std::move(num), std::move(den)};
}

bool RationalArg::is_gamma_pole() const {
    if (num.is_zero()) return true;
    return is_integral() && (-num).is_monic();
}

std::string RationalArg::to_string() const {
    if (is_integral()) return num.to_string();
    const bool wrap = num.deg() > 0;
    const std::string n = wrap ? "(" + num.to_string() + ")" : num.to_string();
    return n + "/(" + den.to_string() + ")";
}

namespace {

void check_gamma_arg(const RationalArg& z) {
    if (z.num.is_zero()) throw domain_error("Gamma has a pole at z = 0");
    if (z.is_integral() && (-z.num).is_monic())
        throw domain_error("Gamma has a pole at z = -n for monic n = " + (-z.num).to_string());
}

// Factor lists for the partial product written as a ratio of exact
// polynomials: Gamma_D(a/f) = [f * prod(f n)] / [a * prod(f n + a)], the
// products running over monic n with deg n <= D.
struct PartialFactors {
    std::vector<Poly> num, den;
    long num_deg = 0, den_deg = 0;
};

PartialFactors partial_factors(const RationalArg& z, int D) {
    check_gamma_arg(z);
    const FqPtr& F = z.num.field();
    PartialFactors out;
    auto push = [&out](std::vector<Poly>& side, long& deg, Poly p) {
        deg += p.deg();
        side.push_back(std::move(p));
    };
    push(out.num, out.num_deg, z.den);
    push(out.den, out.den_deg, z.num);
    for (int d = 0; d <= D; ++d) {
        for (const Poly& n : enumerate_monics(F, d)) {
            Poly fn = z.den * n;
            Poly fna = fn + z.num;
            if (fna.is_zero())
                throw domain_error("Gamma has a pole at z = -n for monic n = " + n.to_string());
            push(out.den, out.den_deg, std::move(fna));
            push(out.num, out.num_deg, std::move(fn));
        }
    }
    return out;
}

// Multiplies the factors as valuation-0 unit series at relative precision
// rel (each factor enters through its top coefficients only).
LaurentSeries unit_product(const std::vector<Poly>& factors, long rel) {
    const FqPtr& F = factors.front().field();
    LaurentSeries acc = LaurentSeries::one(F, SeriesVar::theta_inv, rel);
    for (const Poly& p : factors) {
        LaurentSeries u = LaurentSeries::from_poly(p, SeriesVar::theta_inv, -p.deg() + rel)
                              .shifted(p.deg());
        acc = acc * u;
    }
    return acc;
}

}  // namespace

LaurentSeries gamma_partial(const RationalArg& z, int D, long prec) {
    if (D < 0) throw domain_error("partial-product cutoff must be nonnegative");
    PartialFactors fs = partial_factors(z, D);
    const long val = fs.den_deg - fs.num_deg;  // w-valuation of the ratio
    const long rel = prec - val;
    if (rel <= 0) return LaurentSeries::zero(z.num.field(), SeriesVar::theta_inv, prec);
    LaurentSeries num = unit_product(fs.num, rel);
    LaurentSeries den = unit_product(fs.den, rel);
    return (num * den.invert()).shifted(val);
}

namespace {

std::mutex g_gamma_mutex;
std::map<std::string, GammaValue>& gamma_memo() {
    static std::map<std::string, GammaValue> memo;
    return memo;
}

}  // namespace

GammaValue gamma(const RationalArg& z, long prec, int ceiling) {
    check_gamma_arg(z);
    const std::string key = z.num.field()->key() + "|" + z.num.to_string() + "|" +
                            z.den.to_string() + "|" + std::to_string(prec);
    {
        std::lock_guard<std::mutex> lock(g_gamma_mutex);
        auto it = gamma_memo().find(key);
        if (it != gamma_memo().end()) return it->second;
    }

    LaurentSeries prev = gamma_partial(z, 0, prec);
    LaurentSeries mid = gamma_partial(z, 1, prec);
    int stabilized = -1;
    GammaValue out;
    for (int D = 0; D + 2 <= ceiling; ++D) {
        LaurentSeries next = gamma_partial(z, D + 2, prec);
        if (eq_to_prec(prev, mid, prec) && eq_to_prec(mid, next, prec)) {
            stabilized = D;
            out = GammaValue{z, std::move(next), D + 2, D};
            break;
        }
        prev = std::move(mid);
        mid = std::move(next);
    }
    if (stabilized < 0)
        throw guard_error("Gamma partial products did not stabilize at precision " +
                          std::to_string(prec) + " within the cutoff ceiling " +
                          std::to_string(ceiling));
    {
        std::lock_guard<std::mutex> lock(g_gamma_mutex);
        gamma_memo().emplace(key, out);
    }
    return out;
}

LaurentSeries carlitz_period(const FqPtr& F, long prec) {
    const long q = F->q();
    const long rel = prec + q;  // the period has valuation -q in 1/eta
    if (rel <= 0) return LaurentSeries::zero(F, SeriesVar::eta_inv, prec);
    LaurentSeries acc = LaurentSeries::one(F, SeriesVar::eta_inv, rel);
    // theta^(1-q^i) = -(-theta)^(1-q^i) ... in w = 1/eta the factor
    // (1 - theta^(1-q^i)) reads 1 - w^((q-1)(q^i-1)) for every q.
    for (long i = 1;; ++i) {
        long e = 1;
        for (long j = 0; j < i; ++j) {
            e *= q;
            if (e > rel) break;  // avoid overflow; the factor is 1 anyway
        }
        const long expo = (q - 1) * (e - 1);
        if (expo >= rel) break;
        acc = acc * LaurentSeries::from_terms(F, SeriesVar::eta_inv,
                                              {{0, 1}, {expo, F->neg(1)}}, rel);
    }
    // theta * eta = -eta^q, i.e. the monomial -w^{-q}.
    return (acc.invert() * LaurentSeries::monomial(F, SeriesVar::eta_inv, F->neg(1), -q, rel))
        .truncated(prec);
}

Poly carlitz_exp_denominator(const FqPtr& F, int i) {
    if (i < 0) throw domain_error("coefficient index must be nonnegative");
    Poly D = Poly::one(F);
    Poly theta = Poly::var(F);
    std::uint64_t qi = 1;
    for (int k = 1; k <= i; ++k) {
        qi *= F->q();
        if (qi > 100'000) throw guard_error("Carlitz coefficient denominator degree exceeds the guard");
        // D_k = (theta^(q^k) - theta) * D_{k-1}^q; the q-th power of a
        // polynomial over F_q is an exponent stretch.
        std::vector<felem> cs(qi + 1, 0);
        cs[qi] = 1;
        cs[1] = F->neg(1);
        D = Poly::from_coeffs(F, std::move(cs)) * D.stretch(F->q());
    }
    return D;
}

namespace {

// 1/D_i as a theta_inv series of absolute precision >= prec.
LaurentSeries inverse_of_poly(const Poly& D, long prec) {
    const long d = D.deg();
    const long in_prec = std::max(prec - 2 * d, -d + 1);
    return LaurentSeries::from_poly(D, SeriesVar::theta_inv, in_prec).invert();
}

}  // namespace

std::vector<LaurentSeries> carlitz_exp_coeffs(const FqPtr& F, int n, long prec) {
    std::vector<LaurentSeries> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        out.push_back(inverse_of_poly(carlitz_exp_denominator(F, i), prec).truncated(prec));
    return out;
}

LaurentSeries carlitz_exp(const LaurentSeries& z, long prec, int index_ceiling) {
    const FqPtr& F = z.field();
    if (z.is_zero_to_prec()) return LaurentSeries::zero(F, z.var(), prec);
    const long q = F->q();
    const long ram = z.var() == SeriesVar::eta_inv ? q - 1 : 1;  // valuation scale for c_i
    const long vz = z.valuation();

    // Term valuations val_i = ram * deg(D_i) + q^i * v(z) must rise above
    // prec and be strictly increasing from some index on; find that index.
    std::vector<long> vals;
    long terms_needed = -1;
    {
        long qi = 1, degD = 0;
        for (int i = 0; i <= index_ceiling; ++i) {
            if (i > 0) {
                qi *= q;
                if (qi > 1'000'000) throw guard_error("Carlitz exponential index overflow");
                degD = qi + q * degD;  // deg D_i = q^i + q * deg D_{i-1}
            }
            const long v = ram * degD + qi * vz;
            if (i > 0 && v >= prec && v > vals.back()) {
                // increments grow with i, so all later terms stay above prec
                terms_needed = i;
                break;
            }
            vals.push_back(v);
        }
    }
    if (terms_needed < 0)
        throw domain_error("Carlitz exponential does not converge at valuation " +
                           std::to_string(vz) + " within the index ceiling");

    LaurentSeries acc = LaurentSeries::zero(F, z.var(), prec);
    for (int i = 0; i < terms_needed; ++i) {
        if (vals[i] >= prec) continue;  // term invisible below the cutoff
        const Poly D = carlitz_exp_denominator(F, i);
        long ci_prec_theta = prec;  // needed absolute precision of c_i, theta side
        {
            long qi = 1;
            for (int k = 0; k < i; ++k) qi *= q;
            ci_prec_theta = (prec - qi * vz + ram - 1) / ram;
        }
        LaurentSeries ci = inverse_of_poly(D, ci_prec_theta);
        if (z.var() == SeriesVar::eta_inv) ci = ci.embed_eta();
        acc = acc + (ci * z.frobenius(i)).truncated(prec);
    }
    return acc.truncated(prec);
}

namespace {

// Product of Gamma values, each computed just precisely enough for the
// product to be exact to absolute precision prec.
LaurentSeries gamma_product(const std::vector<RationalArg>& args, long prec) {
    long sum_val = 0;
    std::vector<long> vals;
    vals.reserve(args.size());
    for (const auto& z : args) {
        check_gamma_arg(z);
        const long v = z.num.deg() - z.den.deg();  // valuation of Gamma(z)
        vals.push_back(v);
        sum_val += v;
    }
    const FqPtr& F = args.front().num.field();
    LaurentSeries acc;
    bool first = true;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const long p_i = prec - (sum_val - vals[i]);
        LaurentSeries g = gamma(args[i], p_i).series;
        acc = first ? std::move(g) : acc * g;
        first = false;
    }
    (void)F;
    return acc.truncated(prec);
}

}  // namespace

LaurentSeries reflection_product(const RationalArg& z, long prec) {
    check_gamma_arg(z);
    const FqPtr& F = z.num.field();
    std::vector<RationalArg> args;
    for (felem c = 1; c < F->q(); ++c) args.push_back(RationalArg::make(z.num.scaled(c), z.den));
    return gamma_product(args, prec);
}

LaurentSeries gauss_product(const RationalArg& z, const Poly& g, long prec) {
    check_gamma_arg(z);
    if (g.deg() < 1 || !g.is_monic()) throw domain_error("Gauss factor g must be monic nonconstant");
    const FqPtr& F = z.num.field();
    if (z.is_integral()) throw domain_error("Gauss product expects a non-integral argument");
    std::vector<RationalArg> args;
    const Poly fg = z.den * g;
    for (const Poly& alpha : enumerate_below_deg(F, g.deg()))
        args.push_back(RationalArg::make(z.num + alpha * z.den, fg));
    return gamma_product(args, prec);
}

}  // namespace fqgamma
