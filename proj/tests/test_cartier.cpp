#include <doctest.h>

#include "fcart/cartier.hpp"
#include "fcart/error.hpp"
#include "fcart/oracle.hpp"
#include "fcart/parse.hpp"
#include "fcart/random.hpp"

using namespace fcart;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(parse_polynomial(s, r));
    return Ideal(r, std::move(v));
}

} // namespace

TEST_CASE("cartier_image: worked examples") {
    SUBCASE("coefficients of x^3+y^3 at p=2") {
        auto r = make_ring(2, {"x", "y"});
        CartierStructure S = standard_cartier(r);
        CHECK(ideal_equal(cartier_image(S, I(r, {"x^3+y^3"})), I(r, {"x", "y"})));
    }
    SUBCASE("univariate closed form at n = p") {
        for (fp_t p : {fp_t(2), fp_t(3), fp_t(5)}) {
            auto r = make_ring(p, {"x"});
            CartierStructure S = standard_cartier(r);
            CHECK(ideal_equal(cartier_image(S, I(r, {"x^" + std::to_string(p)})),
                              I(r, {"x"})));
        }
    }
    SUBCASE("image of R is R") {
        for (fp_t p : {fp_t(2), fp_t(5)}) {
            auto r = make_ring(p, {"x", "y"});
            CartierStructure S = standard_cartier(r);
            CHECK(cartier_image(S, Ideal::unit(r)).is_unit());
        }
    }
    SUBCASE("ring mismatch is rejected") {
        auto r = make_ring(2, {"x", "y"});
        auto other = make_ring(2, {"u", "v"});
        CartierStructure S = standard_cartier(r);
        CHECK_THROWS_AS(cartier_image(S, Ideal::unit(other)), Error);
    }
}

TEST_CASE("cartier_power_image: worked examples") {
    SUBCASE("floor division by q^m") {
        auto r = make_ring(2, {"x"});
        CartierStructure S = standard_cartier(r);
        CHECK(ideal_equal(cartier_power_image(S, I(r, {"x^5"}), 2), I(r, {"x"})));
    }
    SUBCASE("zero ideal is fixed") {
        auto r = make_ring(3, {"x"});
        CartierStructure S = standard_cartier(r);
        CHECK(cartier_power_image(S, Ideal::zero(r), 3).is_zero());
    }
    SUBCASE("boundary twist gives ceil division") {
        for (fp_t p : {fp_t(2), fp_t(3), fp_t(5)}) {
            auto r = make_ring(p, {"x"});
            CartierStructure S = make_cartier(r, 1, P(r, "x^" + std::to_string(p - 1)));
            for (std::int64_t n = 0; n <= 12; ++n) {
                std::int64_t expected = (n + p - 1) / p;
                Ideal img = cartier_image(S, I(r, {"x^" + std::to_string(n)}));
                CHECK(ideal_equal(img, I(r, {"x^" + std::to_string(expected)})));
            }
        }
    }
    SUBCASE("exponent cap trips loudly") {
        auto r = make_ring(2, {"x"});
        CartierStructure S = standard_cartier(r);
        try {
            cartier_power_image(S, I(r, {"x"}), 40);
            FAIL("expected ExponentCapExceeded");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ExponentCapExceeded);
        }
    }
}

TEST_CASE("iteration consistency: m-fold iterate equals one-shot extraction") {
    Rng rng(101);
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto r = make_ring(p, {"x", "y"});
        for (int trial = 0; trial < 10; ++trial) {
            Polynomial g = rng.polynomial(r, 2, 3);
            CartierStructure S = make_cartier(r, 1, g);
            Ideal J(r, {rng.polynomial(r, 4, 4), rng.polynomial(r, 4, 4)});
            for (int m = 1; m <= 3; ++m) {
                Ideal one_shot = cartier_power_image(S, J, m, PowerPath::one_shot);
                Ideal iterated = cartier_power_image(S, J, m, PowerPath::iterate);
                CHECK(ideal_equal(one_shot, iterated));
            }
        }
    }
}

TEST_CASE("projection formula: C(f^q J) = f C(J)") {
    Rng rng(103);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        auto r = make_ring(p, {"x", "y"});
        CartierStructure S = standard_cartier(r);
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial f = rng.polynomial(r, 3, 3);
            Ideal J(r, {rng.polynomial(r, 3, 3)});
            Ideal lhs = cartier_image(S, ideal_scale(f.pow(p), J));
            Ideal rhs = ideal_scale(f, cartier_image(S, J));
            CHECK(ideal_equal(lhs, rhs));
        }
    }
}

TEST_CASE("twisted projection formula") {
    Rng rng(105);
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto r = make_ring(p, {"x", "y"});
        for (int trial = 0; trial < 25; ++trial) {
            CartierStructure S = make_cartier(r, 1, rng.polynomial(r, 2, 2));
            Polynomial f = rng.polynomial(r, 3, 3);
            Ideal J(r, {rng.polynomial(r, 3, 3)});
            CHECK(ideal_equal(cartier_image(S, ideal_scale(f.pow(p), J)),
                              ideal_scale(f, cartier_image(S, J))));
        }
    }
}

TEST_CASE("root-of-bracket-power law") {
    Rng rng(107);
    SUBCASE("g*J sits inside the bracket power of the image") {
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x", "y"});
            for (int trial = 0; trial < 20; ++trial) {
                Polynomial g = rng.polynomial(r, 2, 2);
                CartierStructure S = make_cartier(r, 1, g);
                Ideal J(r, {rng.polynomial(r, 4, 4), rng.polynomial(r, 3, 3)});
                Ideal img = cartier_image(S, J);
                Ideal bracket = frobenius_power(img, p);
                CHECK(ideal_contains(bracket, ideal_scale(g, J)));
            }
        }
    }
    SUBCASE("with g = 1 the image is the minimal bracket root") {
        // brute-force search over monomial ideals with generators of degree <= 4
        Rng mono_rng(109);
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x", "y"});
            CartierStructure S = standard_cartier(r);
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<std::vector<std::int64_t>> gens;
                int ngens = int(mono_rng.uniform(1, 3));
                for (int k = 0; k < ngens; ++k)
                    gens.push_back({mono_rng.uniform(0, 4), mono_rng.uniform(0, 4)});
                oracle::MonomialIdeal J = oracle::make_monomial_ideal(gens);
                auto best = oracle::minimal_bracket_root(J, p, 2, 4);
                REQUIRE(best.has_value());
                Ideal expected = oracle::to_engine_ideal(r, *best, MonomialOrder{});
                Ideal main = cartier_image(S, oracle::to_engine_ideal(r, J, MonomialOrder{}));
                CHECK(ideal_equal(main, expected));
            }
        }
    }
}

TEST_CASE("is_f_pure: worked examples") {
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5)}) {
        auto r = make_ring(p, {"x"});
        CartierStructure std_S = standard_cartier(r);
        CartierStructure bd_S = make_cartier(r, 1, P(r, "x^" + std::to_string(p - 1)));
        CHECK(is_f_pure(std_S, Ideal::unit(r)));
        CHECK(is_f_pure(bd_S, I(r, {"x"})));
        CHECK_FALSE(is_f_pure(std_S, I(r, {"x"})));
    }
}

TEST_CASE("stabilized_image: worked examples") {
    SUBCASE("boundary twist fixes (x)") {
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x"});
            CartierStructure S = make_cartier(r, 1, P(r, "x^" + std::to_string(p - 1)));
            StabilizationRecord rec = stabilized_image(S, I(r, {"x"}));
            CHECK(ideal_equal(rec.stable_ideal, I(r, {"x"})));
            CHECK(rec.stable_level == 1);
        }
    }
    SUBCASE("R is already stable") {
        auto r = make_ring(3, {"x", "y"});
        StabilizationRecord rec = stabilized_image(standard_cartier(r), Ideal::unit(r));
        CHECK(rec.stable_ideal.is_unit());
        CHECK(rec.stable_level == 1);
    }
    SUBCASE("non-submodule input is rejected") {
        auto r = make_ring(2, {"x"});
        try {
            stabilized_image(standard_cartier(r), I(r, {"x^2"}));
            FAIL("expected NotCartierSubmodule");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotCartierSubmodule);
        }
    }
    SUBCASE("underline(M) contains every F-pure Cartier submodule: search") {
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x"});
            CartierStructure S = make_cartier(r, 1, P(r, "x^" + std::to_string(p - 1)));
            for (int k = 0; k <= 3; ++k) {
                Ideal M = I(r, {"x^" + std::to_string(k)});
                if (!ideal_contains(M, cartier_image(S, M))) continue;
                StabilizationRecord rec = stabilized_image(S, M);
                CHECK(is_f_pure(S, rec.stable_ideal));
                for (int j = k; j <= 8; ++j) {
                    Ideal K = I(r, {"x^" + std::to_string(j)});
                    if (is_f_pure(S, K) && ideal_contains(M, K))
                        CHECK(ideal_contains(rec.stable_ideal, K));
                }
            }
        }
    }
}

TEST_CASE("zero_extension: worked examples") {
    SUBCASE("standard structure keeps R") {
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x"});
            StabilizationRecord rec =
                zero_extension(standard_cartier(r), Ideal::unit(r), P(r, "x"));
            CHECK(rec.stable_ideal.is_unit());
        }
    }
    SUBCASE("boundary twist drops to (x)") {
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x"});
            CartierStructure S = make_cartier(r, 1, P(r, "x^" + std::to_string(p - 1)));
            StabilizationRecord rec = zero_extension(S, Ideal::unit(r), P(r, "x"));
            CHECK(ideal_equal(rec.stable_ideal, I(r, {"x"})));
            CHECK(is_f_pure(S, rec.stable_ideal));
        }
    }
    SUBCASE("unit f returns M") {
        auto r = make_ring(5, {"x"});
        StabilizationRecord rec =
            zero_extension(standard_cartier(r), Ideal::unit(r), P(r, "1"));
        CHECK(rec.stable_ideal.is_unit());
    }
    SUBCASE("f = 0 and non-F-pure M are rejected") {
        auto r = make_ring(2, {"x"});
        CartierStructure S = standard_cartier(r);
        try {
            zero_extension(S, Ideal::unit(r), Polynomial::zero(r));
            FAIL("expected ZeroDivisorInput");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ZeroDivisorInput);
        }
        try {
            zero_extension(S, I(r, {"x"}), P(r, "x"));
            FAIL("expected NotFPure");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotFPure);
        }
    }
    SUBCASE("minimality among F-pure submodules containing f*M: search") {
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            auto r = make_ring(p, {"x"});
            for (int w = 0; w < int(p); ++w) {
                CartierStructure S = make_cartier(r, 1, P(r, "x^" + std::to_string(w)));
                Ideal M = Ideal::unit(r);
                if (!is_f_pure(S, M)) continue;
                Polynomial f = P(r, "x");
                StabilizationRecord rec = zero_extension(S, M, f);
                CHECK(is_f_pure(S, rec.stable_ideal));
                CHECK(ideal_contains(rec.stable_ideal, ideal_scale(f, M)));
                for (int j = 0; j <= 8; ++j) {
                    Ideal K = I(r, {"x^" + std::to_string(j)});
                    bool admissible = is_f_pure(S, K) && ideal_contains(M, K) &&
                                      ideal_contains(K, ideal_scale(f, M));
                    if (admissible) CHECK(ideal_contains(K, rec.stable_ideal));
                }
            }
        }
    }
}

TEST_CASE("preperiodicity_detect: worked examples") {
    auto r = make_ring(2, {"x"});
    CartierStructure S = standard_cartier(r);
    SUBCASE("chain (x^2) -> (x) -> R -> R") {
        auto hit = preperiodicity_detect(S, I(r, {"x^2"}), 10);
        REQUIRE(hit.has_value());
        CHECK(hit->first == 2);
        CHECK(hit->second == 1);
    }
    SUBCASE("fixed points report (0, 1)") {
        auto hit = preperiodicity_detect(S, Ideal::unit(r), 10);
        REQUIRE(hit.has_value());
        CHECK(hit->first == 0);
        CHECK(hit->second == 1);
        auto zero_hit = preperiodicity_detect(S, Ideal::zero(r), 10);
        REQUIRE(zero_hit.has_value());
        CHECK(zero_hit->first == 0);
        CHECK(zero_hit->second == 1);
    }
    SUBCASE("absent within a tiny budget") {
        CHECK_FALSE(preperiodicity_detect(S, I(r, {"x^64"}), 2).has_value());
    }
}

TEST_CASE("level e = 2 structures: q = p^2 semantics") {
    SUBCASE("univariate closed form under q = 4") {
        auto r = make_ring(2, {"x"});
        CartierStructure S = standard_cartier(r, 2);
        CHECK(S.q() == 4);
        for (std::int64_t n = 0; n <= 20; ++n) {
            Ideal img = cartier_image(S, I(r, {"x^" + std::to_string(n)}));
            CHECK(ideal_equal(img, I(r, {"x^" + std::to_string(n / 4)})));
        }
    }
    SUBCASE("iteration consistency with a twist at e = 2") {
        Rng rng(115);
        auto r = make_ring(2, {"x", "y"});
        for (int trial = 0; trial < 8; ++trial) {
            CartierStructure S = make_cartier(r, 2, rng.polynomial(r, 2, 2));
            Ideal J(r, {rng.polynomial(r, 4, 4)});
            for (int m = 1; m <= 2; ++m) {
                CHECK(ideal_equal(cartier_power_image(S, J, m, PowerPath::one_shot),
                                  cartier_power_image(S, J, m, PowerPath::iterate)));
            }
        }
    }
    SUBCASE("projection formula uses f^{q} with q = p^2") {
        Rng rng(117);
        auto r = make_ring(3, {"x", "y"});
        CartierStructure S = standard_cartier(r, 2);
        for (int trial = 0; trial < 10; ++trial) {
            Polynomial f = rng.polynomial(r, 2, 3);
            Ideal J(r, {rng.polynomial(r, 3, 3)});
            CHECK(ideal_equal(cartier_image(S, ideal_scale(f.pow(9), J)),
                              ideal_scale(f, cartier_image(S, J))));
        }
    }
}

TEST_CASE("unit rescalings of the twist do not change images") {
    Rng rng(111);
    for (fp_t p : {fp_t(3), fp_t(5)}) {
        auto r = make_ring(p, {"x", "y"});
        for (int trial = 0; trial < 10; ++trial) {
            Polynomial g = rng.polynomial(r, 2, 3);
            Ideal J(r, {rng.polynomial(r, 3, 3)});
            Ideal base = cartier_image(make_cartier(r, 1, g), J);
            for (fp_t c = 2; c < p; ++c) {
                CartierStructure Sc = make_cartier(r, 1, g.scaled(c));
                CHECK(ideal_equal(cartier_image(Sc, J), base));
            }
        }
    }
}

TEST_CASE("image computed from generators matches image from the reduced GB") {
    Rng rng(113);
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto r = make_ring(p, {"x", "y"});
        CartierStructure S = standard_cartier(r);
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<Polynomial> gens = {rng.polynomial(r, 3, 3),
                                            rng.polynomial(r, 3, 3)};
            Ideal J(r, gens);
            Ideal via_gens = cartier_image_of_gens(S, r, gens, MonomialOrder{});
            Ideal via_gb = cartier_image(S, J);
            CHECK(ideal_equal(via_gens, via_gb));
        }
    }
}
