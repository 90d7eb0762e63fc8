#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fqgamma/special_values.hpp"

using namespace fqgamma;

namespace {

// Independent slow path for the partial product: every factor (1 + z/n)^{-1}
// is expanded and inverted on its own, instead of pooling numerator and
// denominator polynomials. Used as a cross-check oracle for gamma_partial.
LaurentSeries naive_gamma_partial(const RationalArg& z, int D, long prec) {
    const FqPtr& F = z.num.field();
    const long slack = 8 + 2 * (z.den.deg() + D + 1) * (D + 2);
    const long work = prec + slack;
    LaurentSeries acc = LaurentSeries::from_poly(z.den, SeriesVar::theta_inv, work) *
                        LaurentSeries::from_poly(z.num, SeriesVar::theta_inv, work).invert();
    for (int d = 0; d <= D; ++d) {
        for (const Poly& n : enumerate_monics(F, d)) {
            Poly fn = z.den * n;
            LaurentSeries factor = LaurentSeries::from_poly(fn, SeriesVar::theta_inv, work) *
                                   LaurentSeries::from_poly(fn + z.num, SeriesVar::theta_inv, work).invert();
            acc = acc * factor;
        }
    }
    return acc;
}

RationalArg arg(const FqPtr& F, const std::string& a, const std::string& f) {
    return RationalArg::make(Poly::parse(F, a), Poly::parse(F, f));
}

}  // namespace

TEST_CASE("rational arguments reduce and detect poles") {
    auto F = Fq::make(3);
    RationalArg z = arg(F, "2*t+2", "2*t^2+2*t");  // (2t+2)/(2t(t+1)) = 1/t
    CHECK(z.num.to_string() == "1");
    CHECK(z.den.to_string() == "t");
    CHECK_FALSE(z.is_integral());
    CHECK_FALSE(z.is_gamma_pole());

    CHECK(arg(F, "0", "t").is_gamma_pole());
    CHECK(arg(F, "2*t^2", "1").is_gamma_pole());        // z = -t^2
    CHECK(arg(F, "t^2+2", "2").is_gamma_pole());        // z = 2t^2+1 = -(t^2+2)
    CHECK_FALSE(arg(F, "t^2", "1").is_gamma_pole());    // -(t^2) = 2t^2 is not monic
    CHECK_FALSE(arg(F, "t^3", "t").is_gamma_pole());    // reduces to t^2, same reason

    auto F2 = Fq::make(2);
    CHECK(arg(F2, "1", "1").is_gamma_pole());  // over F_2, 1 = -1 is a pole
    CHECK_THROWS_AS(gamma(arg(F2, "1", "1"), 8), domain_error);
    CHECK_THROWS_AS(gamma(arg(F, "0", "t"), 8), domain_error);
    CHECK_THROWS_AS(RationalArg::make(Poly::parse(F, "1"), Poly::parse(F, "0")), domain_error);
}

TEST_CASE("gamma_partial agrees with the factor-by-factor slow path") {
    std::mt19937 rng(211);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto F = Fq::make(q);
        std::vector<std::pair<std::string, std::string>> cases = {
            {"1", "t"}, {"1", "t^2+t+1"}, {"t+1", "t^2"}, {"t^2+1", "t"}};
        for (const auto& [a, f] : cases) {
            RationalArg z = arg(F, a, f);
            if (z.is_gamma_pole()) continue;
            for (int D : {0, 1, 2}) {
                LaurentSeries fast = gamma_partial(z, D, 20);
                LaurentSeries slow = naive_gamma_partial(z, D, 20);
                CHECK(eq_to_prec(fast, slow, 20));
            }
        }
    }
}

TEST_CASE("gamma valuation and the leading-term law") {
    // Gamma(a/f) * (a/f) = 1 + O(w) whenever deg a < deg f.
    std::mt19937 rng(223);
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
        auto F = Fq::make(q);
        for (const auto& [a, f] : std::vector<std::pair<std::string, std::string>>{
                 {"1", "t"}, {"1", "t^2"}, {"t", "t^2+1"}, {"1", "t^2+t+1"}, {"t+1", "t^3+t+1"}}) {
            RationalArg z = arg(F, a, f);
            if (z.is_gamma_pole()) continue;
            GammaValue gv = gamma(z, 24);
            CHECK(gv.series.valuation() == z.num.deg() - z.den.deg());
            LaurentSeries ratio = gv.series *
                                  LaurentSeries::from_poly(z.num, SeriesVar::theta_inv, 30) *
                                  LaurentSeries::from_poly(z.den, SeriesVar::theta_inv, 30).invert();
            CHECK(eq_to_prec(ratio, LaurentSeries::one(F, SeriesVar::theta_inv, 1), 1));
        }
    }
}

TEST_CASE("adaptive gamma is stable under recomputation at higher precision and cutoff") {
    for (std::uint64_t q : {2ull, 3ull, 5ull}) {
        auto F = Fq::make(q);
        RationalArg z = arg(F, "1", "t");
        GammaValue g64 = gamma(z, 64);
        GammaValue g128 = gamma(z, 128);
        CHECK(eq_to_prec(g64.series, g128.series, 64));
        CHECK(g64.stabilized_at <= g64.cutoff - 2);
        // one cutoff past the certified one changes nothing at this precision
        LaurentSeries deeper = gamma_partial(z, g64.cutoff + 1, 64);
        CHECK(eq_to_prec(g64.series, deeper, 64));
        // memoized call returns the identical value
        GammaValue again = gamma(z, 64);
        CHECK(again.cutoff == g64.cutoff);
        CHECK(eq_to_prec(again.series, g64.series, 64));
    }
    // Gamma(1) converges over F_3 (1 is not a pole there: -1 is not monic).
    auto F3 = Fq::make(3);
    CHECK_NOTHROW(gamma(arg(F3, "1", "1"), 16));
}

TEST_CASE("carlitz period: frozen q=2 expansion and valuation across q") {
    // Hand-derived from pi = theta*eta*prod(1 - theta^(1-2^i))^{-1} with
    // eta = theta: unit part prod (1+w)^{-1}(1+w^3)^{-1}(1+w^7)^{-1}... whose
    // w^n coefficient is the parity of the number of partitions of n into
    // parts {1,3,7,15,...}; nonzero exponents of pi below 13 come out as
    // -2,-1,0,4,7,10,12.
    auto F2 = Fq::make(2);
    LaurentSeries pi2 = carlitz_period(F2, 13);
    CHECK(pi2.valuation() == -2);
    std::vector<std::pair<long, felem>> expect = {{-2, 1}, {-1, 1}, {0, 1}, {4, 1}, {7, 1}, {10, 1}, {12, 1}};
    CHECK(pi2.terms() == expect);

    for (std::uint64_t q : {3ull, 4ull, 5ull, 9ull}) {
        auto F = Fq::make(q);
        LaurentSeries pi = carlitz_period(F, 40);
        CHECK(pi.var() == SeriesVar::eta_inv);
        CHECK(pi.valuation() == -static_cast<long>(q));
        CHECK(pi.leading_coeff() == F->neg(1));
        // recomputation at higher precision extends, never changes
        CHECK(eq_to_prec(pi, carlitz_period(F, 80), 40));
    }
}

TEST_CASE("carlitz exponential coefficients") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto F = Fq::make(q);
        Poly theta = Poly::var(F);
        // D_1 = theta^q - theta, D_2 = (theta^(q^2) - theta) * D_1^q, built
        // here through Poly::pow as an independent construction.
        Poly D1 = theta.pow(F->q()) - theta;
        CHECK(carlitz_exp_denominator(F, 1) == D1);
        Poly D2 = (theta.pow(F->q() * F->q()) - theta) * D1.pow(F->q());
        CHECK(carlitz_exp_denominator(F, 2) == D2);

        auto cs = carlitz_exp_coeffs(F, 2, 80);
        REQUIRE(cs.size() == 3);
        CHECK(eq_to_prec(cs[0], LaurentSeries::one(F, SeriesVar::theta_inv, 80), 80));
        for (int i = 1; i <= 2; ++i) {
            const Poly Di = carlitz_exp_denominator(F, i);
            CHECK(cs[i].valuation() == Di.deg());
            LaurentSeries back = cs[i] * LaurentSeries::from_poly(Di, SeriesVar::theta_inv, 90);
            CHECK(eq_to_prec(back, LaurentSeries::one(F, SeriesVar::theta_inv, back.prec()), back.prec()));
        }
    }
}

TEST_CASE("carlitz exponential functional equation e(theta z) = theta e(z) + e(z)^q") {
    std::mt19937 rng(227);
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto F = Fq::make(q);
        std::uniform_int_distribution<long> vd(1, 4);
        std::uniform_int_distribution<felem> cd(0, F->q() - 1);
        std::uniform_int_distribution<felem> lead(1, F->q() - 1);
        for (int it = 0; it < 7; ++it) {
            const long v = vd(rng);
            std::vector<std::pair<long, felem>> ts = {{v, lead(rng)}};
            for (long e = v + 1; e < v + 50; ++e) ts.emplace_back(e, cd(rng));
            LaurentSeries z = LaurentSeries::from_terms(F, SeriesVar::theta_inv, ts, v + 50);
            const long prec = 40;
            LaurentSeries theta_z = z.shifted(-1);  // theta * z in 1/theta
            LaurentSeries lhs = carlitz_exp(theta_z, prec);
            LaurentSeries ez = carlitz_exp(z, prec + 1);
            LaurentSeries rhs = ez.shifted(-1) + ez.frobenius();
            CHECK(eq_to_prec(lhs, rhs, prec));
        }
    }
}

TEST_CASE("the period is a zero of the carlitz exponential") {
    for (std::uint64_t q : {2ull, 3ull}) {
        auto F = Fq::make(q);
        LaurentSeries pi = carlitz_period(F, 200);
        LaurentSeries e = carlitz_exp(pi, 120);
        CHECK(e.is_zero_to_prec());
        CHECK(e.prec() >= 120);
        // scalar multiples c * pi, c in F_q^x, are zeros as well
        for (felem c = 1; c < F->q(); ++c)
            CHECK(carlitz_exp(pi.scaled(c), 120).is_zero_to_prec());
    }
}

TEST_CASE("reflection and gauss products have the expected valuations and precision") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto F = Fq::make(q);
        RationalArg z = arg(F, "1", "t");
        LaurentSeries refl = reflection_product(z, 30);
        CHECK(refl.prec() >= 30);
        CHECK(refl.valuation() == -static_cast<long>(q - 1));  // (q-1) factors of valuation -1

        Poly g = Poly::parse(F, "t+1");
        LaurentSeries gp = gauss_product(z, g, 25);
        CHECK(gp.prec() >= 25);
        // q factors Gamma((1 + alpha t)/(t(t+1))), each of valuation
        // deg(1 + alpha t) - 2.
        long expected = 0;
        for (const Poly& alpha : enumerate_below_deg(F, 1))
            expected += (Poly::one(F) + alpha * Poly::var(F)).deg() - 2;
        CHECK(gp.valuation() == expected);
    }
    auto F3 = Fq::make(3);
    CHECK_THROWS_AS(gauss_product(arg(F3, "t", "1"), Poly::parse(F3, "t"), 10), domain_error);
    CHECK_THROWS_AS(gauss_product(arg(F3, "1", "t"), Poly::parse(F3, "2*t"), 10), domain_error);
}

TEST_CASE("reflection product relates to the period: embedded ratio is a unit times a monomial") {
    // By the reflection relation the product over F_q^x of Gamma(c/t) matches
    // the period up to an algebraic factor; numerically the embedded ratio
    // must at least be a unit with integral valuation difference
    // val(embed(refl)) - val(pi) and stable under precision doubling.
    for (std::uint64_t q : {2ull, 3ull}) {
        auto F = Fq::make(q);
        LaurentSeries refl = reflection_product(arg(F, "1", "t"), 40).embed_eta();
        LaurentSeries pi = carlitz_period(F, refl.prec());
        LaurentSeries ratio = refl * pi.invert();
        LaurentSeries refl2 = reflection_product(arg(F, "1", "t"), 80).embed_eta();
        LaurentSeries ratio2 = refl2 * carlitz_period(F, refl2.prec()).invert();
        CHECK(eq_to_prec(ratio, ratio2, std::min(ratio.prec(), ratio2.prec())));
    }
}
