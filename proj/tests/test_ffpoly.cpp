#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fqgamma/poly.hpp"
#include "fqgamma/ring.hpp"

using namespace fqgamma;

namespace {

const std::vector<std::uint64_t> kAllQ = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64};

Poly random_poly(const FqPtr& F, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> degd(-1, maxdeg);
    const int d = degd(rng);
    std::vector<felem> cs(d + 1, 0);
    std::uniform_int_distribution<felem> cd(0, F->q() - 1);
    std::uniform_int_distribution<felem> topd(1, F->q() - 1);
    for (int i = 0; i < d; ++i) cs[i] = cd(rng);
    if (d >= 0) cs[d] = topd(rng);
    return Poly::from_coeffs(F, std::move(cs));
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
        auto F = Fq::make(q);
        for (felem a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
            for (felem b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (felem c = 0; c < q; ++c) {
                    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms hold on samples for every built-in q") {
    std::mt19937 rng(20260816);
    for (std::uint64_t q : kAllQ) {
        auto F = Fq::make(q);
        std::uniform_int_distribution<felem> d(0, F->q() - 1);
        for (int it = 0; it < 500; ++it) {
            const felem a = d(rng), b = d(rng), c = d(rng);
            CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
            if (b != 0) CHECK(F->mul(F->div(a, b), b) == a);
        }
        // Frobenius is additive: (a+b)^p = a^p + b^p.
        for (int it = 0; it < 200; ++it) {
            const felem a = d(rng), b = d(rng);
            CHECK(F->pow(F->add(a, b), F->p()) == F->add(F->pow(a, F->p()), F->pow(b, F->p())));
        }
    }
}

TEST_CASE("built-in moduli annihilate the generator and pow matches repeated multiplication") {
    for (std::uint64_t q : kAllQ) {
        auto F = Fq::make(q);
        if (F->r() > 1) {
            // Evaluate the modulus at g through parse: modulus(g) must be 0.
            const std::string key = F->key();
            const std::string mod_text = key.substr(key.find("mod=") + 4);
            CHECK(F->parse_elem(mod_text) == 0);
        }
        for (felem a = 1; a < std::min<std::uint64_t>(q, 12); ++a) {
            felem acc = 1;
            for (int e = 0; e < 7; ++e) {
                CHECK(F->pow(a, e) == acc);
                acc = F->mul(acc, a);
            }
            CHECK(F->mul(F->pow(a, -3), F->pow(a, 3)) == 1);
        }
    }
}

TEST_CASE("field constructor rejections") {
    CHECK_THROWS_AS(Fq::make(6), domain_error);
    CHECK_THROWS_AS(Fq::make(1), domain_error);
    CHECK_THROWS_AS(Fq::make(1ull << 17), guard_error);
    CHECK_THROWS_AS(Fq::make(4, "g^2+1"), domain_error);       // (g+1)^2 over F_2
    CHECK_THROWS_AS(Fq::make(9, "g^2+2"), domain_error);       // g^2 = 1 has roots
    CHECK_NOTHROW(Fq::make(9, "g^2+1"));                       // -1 is not a square mod 3
    CHECK_THROWS_AS(Fq::make(2)->parse_elem("g"), domain_error);
}

TEST_CASE("element text grammar round-trips") {
    for (std::uint64_t q : {2ull, 3ull, 4ull, 9ull, 25ull, 64ull}) {
        auto F = Fq::make(q);
        for (felem a = 0; a < q; ++a) {
            CHECK(F->parse_elem(F->to_string(a)) == a);
            CHECK(F->parse_elem("(" + F->to_string(a) + ")") == a);
        }
    }
    auto F9 = Fq::make(9);
    CHECK(F9->to_string(F9->parse_elem("2*g+ 2")) == "2*g+2");
    CHECK(F9->parse_elem("g^2") == F9->mul(F9->gen(), F9->gen()));
    CHECK(F9->parse_elem("-1") == F9->from_int(2));
    CHECK(F9->parse_elem("g-g") == 0);
}

TEST_CASE("polynomial arithmetic and divmod round-trip") {
    std::mt19937 rng(7);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 9ull}) {
        auto F = Fq::make(q);
        for (int it = 0; it < 300; ++it) {
            Poly a = random_poly(F, 8, rng);
            Poly b = random_poly(F, 5, rng);
            if (b.is_zero()) continue;
            auto [quo, rem] = a.divmod(b);
            CHECK(quo * b + rem == a);
            CHECK(rem.deg() < b.deg());
        }
        // ring identities
        Poly t = Poly::var(F);
        CHECK((t + Poly::one(F)) * (t - Poly::one(F)) == t * t - Poly::one(F));
        CHECK_THROWS_AS(Poly::one(F).divmod(Poly::zero(F)), domain_error);
    }
}

TEST_CASE("gcd and lcm properties") {
    std::mt19937 rng(11);
    for (std::uint64_t q : {2ull, 3ull, 5ull, 8ull}) {
        auto F = Fq::make(q);
        for (int it = 0; it < 200; ++it) {
            Poly a = random_poly(F, 6, rng);
            Poly b = random_poly(F, 6, rng);
            Poly g = gcd(a, b);
            if (a.is_zero() && b.is_zero()) {
                CHECK(g.is_zero());
                continue;
            }
            CHECK(g.is_monic());
            if (!a.is_zero()) CHECK((a % g).is_zero());
            if (!b.is_zero()) CHECK((b % g).is_zero());
            CHECK(g == gcd(b, a));
            if (!a.is_zero() && !b.is_zero()) {
                Poly l = lcm(a, b);
                CHECK((l % a.monic()).is_zero());
                CHECK((l % b.monic()).is_zero());
                CHECK(l * g == (a * b).monic());
            }
        }
    }
}

TEST_CASE("polynomial text grammar") {
    auto F3 = Fq::make(3);
    CHECK(Poly::parse(F3, "t^2+2*t").to_string() == "t^2+2*t");
    CHECK(Poly::parse(F3, "t^3-t") == Poly::parse(F3, "t^3+2*t"));
    CHECK(Poly::parse(F3, " t ^ 2 + 2 t ") == Poly::parse(F3, "t^2+2*t"));
    CHECK(Poly::parse(F3, "0").is_zero());
    CHECK(Poly::parse(F3, "2+t") .to_string() == "t+2");
    CHECK_THROWS_AS(Poly::parse(F3, "t^2+&"), domain_error);
    CHECK_THROWS_AS(Poly::parse(F3, "t++1"), domain_error);

    auto F4 = Fq::make(4);
    Poly p = Poly::parse(F4, "(g+1)*t^2 + g");
    CHECK(p.to_string() == "(g+1)*t^2+g");
    CHECK(p.coeff(2) == F4->parse_elem("g+1"));
    CHECK(p.coeff(0) == F4->gen());
    CHECK(Poly::parse(F4, "g*t+g^2") .to_string() == "g*t+(g+1)");

    std::mt19937 rng(13);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 9ull, 25ull}) {
        auto F = Fq::make(q);
        for (int it = 0; it < 150; ++it) {
            Poly a = random_poly(F, 7, rng);
            CHECK(Poly::parse(F, a.to_string()) == a);
        }
    }
}

TEST_CASE("monic enumeration is the base-q counter order") {
    auto F3 = Fq::make(3);
    auto m2 = enumerate_monics(F3, 2);
    REQUIRE(m2.size() == 9);
    CHECK(m2.front().to_string() == "t^2");
    CHECK(m2[1].to_string() == "t^2+1");
    CHECK(m2[3].to_string() == "t^2+t");
    CHECK(m2.back().to_string() == "t^2+2*t+2");
    for (const auto& m : m2) CHECK(m.is_monic());

    auto below = enumerate_below_deg(F3, 2);
    REQUIRE(below.size() == 9);
    CHECK(below[0].is_zero());
    CHECK(below[1].is_one());
    CHECK(below[4].to_string() == "t+1");

    for (std::uint64_t q : {2ull, 4ull, 5ull}) {
        auto F = Fq::make(q);
        for (int d = 0; d <= 3; ++d) {
            auto ms = enumerate_monics(F, d);
            CHECK(ms.size() == static_cast<std::size_t>(std::pow(double(q), d) + 0.5));
            std::set<std::uint64_t> codes;
            for (const auto& m : ms) codes.insert(m.code());
            CHECK(codes.size() == ms.size());
        }
    }
}

TEST_CASE("irreducibility and trial-division factorization") {
    auto F2 = Fq::make(2);
    auto F3 = Fq::make(3);
    auto F5 = Fq::make(5);
    CHECK(is_irreducible(Poly::parse(F2, "t^2+t+1")));
    CHECK_FALSE(is_irreducible(Poly::parse(F2, "t^2+1")));
    CHECK(is_irreducible(Poly::parse(F3, "t^2+1")));
    CHECK_FALSE(is_irreducible(Poly::parse(F5, "t^2+1")));
    CHECK(is_irreducible(Poly::parse(F2, "t^3+t+1")));
    CHECK_FALSE(is_irreducible(Poly::parse(F3, "t^3-t")));

    auto fs = factor(Poly::parse(F2, "t^2") * Poly::parse(F2, "t+1").pow(3));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first.to_string() == "t");
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first.to_string() == "t+1");
    CHECK(fs[1].second == 3);

    std::mt19937 rng(17);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        auto F = Fq::make(q);
        for (int it = 0; it < 60; ++it) {
            Poly a = random_poly(F, 6, rng);
            if (a.deg() < 1) continue;
            auto parts = factor(a);
            Poly prod = Poly::one(F);
            for (const auto& [p, e] : parts) {
                CHECK(p.is_monic());
                CHECK(is_irreducible(p));
                prod = prod * p.pow(e);
            }
            CHECK(prod == a.monic());
        }
    }
}

TEST_CASE("frobenius stretch equals the q-th power") {
    std::mt19937 rng(19);
    for (std::uint64_t q : {2ull, 3ull, 4ull, 9ull}) {
        auto F = Fq::make(q);
        for (int it = 0; it < 40; ++it) {
            Poly a = random_poly(F, 5, rng);
            CHECK(a.stretch(F->q()) == a.pow(F->q()));
        }
    }
}

TEST_CASE("unit group enumeration, order formula, and indexing") {
    auto F3 = Fq::make(3);
    UnitGroup U(Poly::parse(F3, "t^2+2*t"));  // t(t-1) over F_3
    REQUIRE(U.size() == 4);
    CHECK(U.units()[0].to_string() == "1");
    CHECK(U.units()[1].to_string() == "2");
    CHECK(U.units()[2].to_string() == "t+1");
    CHECK(U.units()[3].to_string() == "2*t+2");

    // |(A/f)^x| agrees with the product formula over the distinct irreducible
    // factors, across a corpus of moduli and fields.
    for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        auto F = Fq::make(q);
        for (const std::string& ftxt : {"t", "t^2", "t^2+t", "t^3+t^2", "t^3+t+1"}) {
            Poly f = Poly::parse(F, ftxt);
            UnitGroup Uf(f);
            double expected = std::pow(double(q), f.deg());
            for (const auto& [p, e] : factor(f)) {
                (void)e;
                expected *= 1.0 - std::pow(double(q), -p.deg());
            }
            CHECK(Uf.size() == static_cast<std::size_t>(expected + 0.5));
            for (std::size_t i = 0; i < Uf.size(); ++i)
                CHECK(Uf.index_of(Uf.units()[i]) == static_cast<long>(i));
        }
    }

    // Units are closed under multiplication and every unit has an inverse.
    UnitGroup U4(Poly::parse(Fq::make(4), "t^2+t"));
    const ModCtx& R = U4.ring();
    for (const auto& a : U4.units()) {
        bool has_inverse = false;
        for (const auto& b : U4.units()) {
            Poly ab = R.mul(a, b);
            CHECK(U4.is_unit(ab));
            if (ab.is_one()) has_inverse = true;
        }
        CHECK(has_inverse);
    }
}

TEST_CASE("monic residue classes") {
    auto F3 = Fq::make(3);
    ModCtx R(Poly::parse(F3, "t^2+2*t"));
    CHECK(R.is_monic_class(Poly::parse(F3, "t+1")));
    CHECK(R.is_monic_class(Poly::one(F3)));
    CHECK_FALSE(R.is_monic_class(Poly::parse(F3, "2*t+2")));
    CHECK_FALSE(R.is_monic_class(Poly::zero(F3)));
    // t^2+t reduces to 2t mod t^2+2t: not monic; t^2+2t+1 reduces to 1: monic.
    CHECK_FALSE(R.is_monic_class(Poly::parse(F3, "t^2+t")));
    CHECK(R.is_monic_class(Poly::parse(F3, "t^2+2*t+1")));
}
