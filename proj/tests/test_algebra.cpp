#include <doctest.h>

#include "fcart/caps.hpp"
#include "fcart/error.hpp"
#include "fcart/groebner.hpp"
#include "fcart/padic.hpp"
#include "fcart/parse.hpp"
#include "fcart/random.hpp"

using namespace fcart;

namespace {

RingPtr ring_xy(std::uint64_t p) { return make_ring(p, {"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(parse_polynomial(s, r));
    return Ideal(r, std::move(v));
}

} // namespace

TEST_CASE("fp arithmetic and primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK(is_prime(2147483647)); // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));

    CHECK(fp_inv(3, 7) == 5);
    CHECK(fp_pow(2, 10, 1009) == 1024 % 1009);
    CHECK(fp_binomial(5, 2, 7) == 3); // 10 mod 7
    CHECK(fp_binomial(6, 3, 3) == fp_t(20 % 3));
    CHECK(fp_binomial(4, 7, 5) == 0);
}

TEST_CASE("ring validation") {
    CHECK_THROWS_AS(make_ring(4, {"x"}), Error);
    CHECK_THROWS_AS(make_ring(7, {"x", "x"}), Error);
    CHECK_THROWS_AS(make_ring(7, {}), Error);
    auto r = make_ring(7, {"x", "y"});
    CHECK(r->nvars == 2);
}

TEST_CASE("parser: literal grammar") {
    auto r = ring_xy(7);
    Polynomial f = P(r, "x^2+y^3");
    CHECK(f.term_count() == 2);
    CHECK(f.str() == "y^3+x^2"); // grevlex descending
}

TEST_CASE("parser: coefficients collapse mod p") {
    auto r = ring_xy(2);
    CHECK(P(r, "x + x").is_zero());
}

TEST_CASE("parser: negative exponent is rejected") {
    auto r = make_ring(3, {"x"});
    try {
        parse_polynomial("x^(-1)", r);
        FAIL("expected NegativeExponent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeExponent);
    }
    try {
        parse_polynomial("x^-1", r);
        FAIL("expected NegativeExponent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeExponent);
    }
}

TEST_CASE("parser: errors carry byte offsets") {
    auto r = ring_xy(5);
    try {
        parse_polynomial("x^2 + + y", r);
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(e.byte_offset() == 6);
    }
    try {
        parse_polynomial("x + z", r);
        FAIL("expected UnknownVariable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVariable);
        CHECK(e.byte_offset() == 4);
    }
}

TEST_CASE("parser: implicit multiplication and whitespace") {
    auto r = ring_xy(7);
    CHECK(P(r, "2xy^2") == P(r, "2*x*y^2"));
    CHECK(P(r, " 3 x ^ 2 y + 1 ") == P(r, "3x^2y+1"));
    CHECK(P(r, "10x") == P(r, "3x"));
    CHECK(P(r, "-x+y") == P(r, "y") - P(r, "x"));
}

TEST_CASE("parse/serialize round trip") {
    Rng rng(7);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(7)}) {
        auto r = ring_xy(p);
        for (int i = 0; i < 40; ++i) {
            Polynomial f = rng.polynomial(r, 6, 6);
            CHECK(P(r, f.str()) == f);
        }
    }
}

TEST_CASE("multi-character variable names use explicit separators") {
    auto r = make_ring(5, {"alpha", "beta"});
    Polynomial f = parse_polynomial("2*alpha^2*beta + alpha", r);
    CHECK(f.term_count() == 2);
    CHECK(f.str() == "2*alpha^2*beta+alpha");
    CHECK(parse_polynomial(f.str(), r) == f);
    // a name that is a prefix of another resolves by longest match
    auto r2 = make_ring(5, {"x", "xy"});
    Polynomial g = parse_polynomial("xy", r2);
    REQUIRE(g.term_count() == 1);
    CHECK(g.terms()[0].m.e == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("root_decompose: worked examples") {
    auto r2 = ring_xy(2);
    SUBCASE("x^3 + y^3 at q = 2") {
        RootDecomposition dec = root_decompose(P(r2, "x^3+y^3"), 2);
        REQUIRE(dec.parts.size() == 2);
        CHECK(dec.parts.at({1, 0}) == P(r2, "x"));
        CHECK(dec.parts.at({0, 1}) == P(r2, "y"));
    }
    SUBCASE("x^q is x times the zero residue") {
        for (fp_t p : {fp_t(2), fp_t(5)}) {
            auto r = ring_xy(p);
            RootDecomposition dec = root_decompose(P(r, "x^" + std::to_string(p)), p);
            REQUIRE(dec.parts.size() == 1);
            CHECK(dec.parts.at({0, 0}) == P(r, "x"));
        }
    }
    SUBCASE("constants are Frobenius-fixed") {
        auto r = ring_xy(7);
        RootDecomposition dec = root_decompose(P(r, "5"), 7);
        REQUIRE(dec.parts.size() == 1);
        CHECK(dec.parts.at({0, 0}) == P(r, "5"));
    }
    SUBCASE("q must be a power of p") {
        CHECK_THROWS_AS(root_decompose(P(r2, "x"), 6), Error);
        CHECK_THROWS_AS(root_decompose(P(r2, "x"), 3), Error);
    }
}

TEST_CASE("root_decompose round-trip: 200 random per (p, q)") {
    Rng rng(11);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        auto r = ring_xy(p);
        for (std::int64_t q : {std::int64_t(p), std::int64_t(p) * p}) {
            for (int i = 0; i < 200; ++i) {
                Polynomial f = rng.polynomial(r, 12, 10);
                RootDecomposition dec = root_decompose(f, q);
                for (const auto& [a, h] : dec.parts) {
                    CHECK_FALSE(h.is_zero());
                    for (auto v : a) CHECK(v < q);
                }
                CHECK(root_reassemble(dec, r) == f);
            }
        }
    }
}

TEST_CASE("groebner_reduce: worked examples") {
    auto r = ring_xy(7);
    SUBCASE("linear elimination") {
        Ideal id = I(r, {"x^2", "x^2+y"});
        REQUIRE(id.reduced_gb().size() == 2);
        CHECK(id.reduced_gb()[0] == P(r, "x^2"));
        CHECK(id.reduced_gb()[1] == P(r, "y"));
    }
    SUBCASE("unit ideal") {
        Ideal id = I(r, {"x^3+2y", "1"});
        CHECK(id.is_unit());
        REQUIRE(id.reduced_gb().size() == 1);
        CHECK(id.reduced_gb()[0] == P(r, "1"));
    }
    SUBCASE("freshman's dream in characteristic 2") {
        auto r2 = ring_xy(2);
        Ideal a = I(r2, {"x^2+y^2", "x^2+2xy+y^2"});
        REQUIRE(a.reduced_gb().size() == 1);
        CHECK(a.reduced_gb()[0] == P(r2, "x^2+y^2"));
        CHECK(ideal_equal(a, I(r2, {"x^2+y^2"})));
    }
    SUBCASE("empty generators give the zero ideal") {
        Ideal z = Ideal::zero(r);
        CHECK(z.is_zero());
        CHECK(z.reduced_gb().empty());
    }
}

TEST_CASE("ideal equality and containment: worked examples") {
    auto r2 = ring_xy(2);
    CHECK(ideal_equal(I(r2, {"x^2+y^2"}), I(r2, {"x^2+2xy+y^2"})));
    auto r = ring_xy(5);
    CHECK(ideal_contains(I(r, {"x"}), I(r, {"x^2"})));
    CHECK_FALSE(ideal_equal(I(r, {"x"}), I(r, {"x^2"})));
    CHECK(ideal_equal(Ideal::zero(r), Ideal::zero(r)));

    auto other = make_ring(5, {"u", "v"});
    CHECK_THROWS_AS(ideal_equal(I(r, {"x"}), I(other, {"u"})), Error);
}

TEST_CASE("ideal_combine: worked examples") {
    auto r = ring_xy(5);
    CHECK(ideal_equal(ideal_product(I(r, {"x"}), I(r, {"x", "y"})), I(r, {"x^2", "xy"})));
    CHECK(ideal_equal(ideal_scale(P(r, "x"), I(r, {"y"})), I(r, {"xy"})));
    CHECK(ideal_equal(ideal_sum(I(r, {"x"}), I(r, {"y"})), I(r, {"x", "y"})));
}

TEST_CASE("frobenius_power: worked examples") {
    auto r = ring_xy(2);
    CHECK(ideal_equal(frobenius_power(I(r, {"x", "y"}), 2), I(r, {"x^2", "y^2"})));
    CHECK(frobenius_power(Ideal::zero(r), 2).is_zero());
    auto r3 = ring_xy(3);
    CHECK(ideal_equal(frobenius_power(I(r3, {"x+y"}), 3), I(r3, {"x^3+y^3"})));
    CHECK_THROWS_AS(frobenius_power(I(r, {"x"}), 3), Error);
}

TEST_CASE("frobenius_power is generating-set independent") {
    Rng rng(13);
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto r = ring_xy(p);
        for (int i = 0; i < 25; ++i) {
            std::vector<Polynomial> gens;
            int ngens = int(rng.uniform(1, 3));
            for (int k = 0; k < ngens; ++k) gens.push_back(rng.polynomial(r, 3, 3));
            Ideal J(r, gens);
            Ideal from_gens = frobenius_power(J, p);
            Ideal from_gb(r, J.reduced_gb());
            CHECK(ideal_equal(from_gens, frobenius_power(from_gb, p)));
        }
    }
}

TEST_CASE("canonical form: equal ideals from different generating sets") {
    Rng rng(17);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5)}) {
        auto r = ring_xy(p);
        for (int i = 0; i < 20; ++i) {
            Polynomial f = rng.polynomial(r, 3, 3);
            Polynomial g = rng.polynomial(r, 3, 3);
            Ideal a(r, {f, g});
            // row operations preserve the ideal
            Polynomial h = f + rng.polynomial(r, 2, 2) * g;
            Ideal b(r, {h, g, f + g});
            CHECK(a.reduced_gb() == b.reduced_gb());
        }
    }
}

TEST_CASE("reduced GB satisfies the Buchberger criterion and reducedness") {
    Rng rng(131);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(7)}) {
        auto r = ring_xy(p);
        for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
            MonomialOrder ord{kind};
            for (int trial = 0; trial < 12; ++trial) {
                std::vector<Polynomial> gens = {rng.polynomial(r, 3, 4),
                                                rng.polynomial(r, 3, 4),
                                                rng.polynomial(r, 2, 3)};
                Ideal id(r, gens, ord);
                const auto& gb = id.reduced_gb();
                // membership: generators reduce to zero
                for (const auto& g : gens) CHECK(normal_form(g, gb, ord).is_zero());
                // Buchberger criterion: all S-polynomials reduce to zero
                for (std::size_t i = 0; i < gb.size(); ++i) {
                    for (std::size_t j = i + 1; j < gb.size(); ++j) {
                        auto lt = [&](const Polynomial& f) {
                            const Term* best = &f.terms()[0];
                            for (const auto& t : f.terms())
                                if (ord.cmp(t.m, best->m) > 0) best = &t;
                            return *best;
                        };
                        Term ti = lt(gb[i]), tj = lt(gb[j]);
                        Monomial L = mono_lcm(ti.m, tj.m);
                        Polynomial s =
                            gb[i].times_monomial(mono_div(L, ti.m), fp_inv(ti.c, p)) -
                            gb[j].times_monomial(mono_div(L, tj.m), fp_inv(tj.c, p));
                        CHECK(normal_form(s, gb, ord).is_zero());
                    }
                }
                // reducedness: monic leads, pairwise non-divisible, reduced tails
                for (std::size_t i = 0; i < gb.size(); ++i) {
                    auto lt = [&](const Polynomial& f) {
                        const Term* best = &f.terms()[0];
                        for (const auto& t : f.terms())
                            if (ord.cmp(t.m, best->m) > 0) best = &t;
                        return *best;
                    };
                    CHECK(lt(gb[i]).c == 1);
                    std::vector<Polynomial> others;
                    for (std::size_t j = 0; j < gb.size(); ++j)
                        if (j != i) others.push_back(gb[j]);
                    if (!others.empty())
                        CHECK(normal_form(gb[i], others, ord) == gb[i]);
                }
            }
        }
    }
}

TEST_CASE("normal form is ring-linear") {
    Rng rng(19);
    auto r = ring_xy(5);
    for (int i = 0; i < 20; ++i) {
        Ideal id(r, {rng.polynomial(r, 3, 3), rng.polynomial(r, 3, 3)});
        Polynomial f = rng.polynomial(r, 4, 4);
        Polynomial g = rng.polynomial(r, 4, 4);
        fp_t a = fp_t(rng.uniform(0, 4));
        Polynomial lhs = id.reduce(f.scaled(a) + g);
        Polynomial rhs = id.reduce(f).scaled(a) + id.reduce(g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("normal form detects membership") {
    auto r = ring_xy(7);
    Ideal id = I(r, {"x^2+y", "y^3"});
    CHECK(id.contains(P(r, "x^2+y")));
    CHECK(id.contains(P(r, "x^2y+y^2+xy^3"))); // y*(x^2+y) + x*y^3
    CHECK_FALSE(id.contains(P(r, "x")));
    CHECK_FALSE(id.contains(P(r, "y^4+x^2y"))); // reduces to -y^2
}

TEST_CASE("Buchberger pair budget trips loudly") {
    auto r = ring_xy(7);
    std::int64_t saved = global_caps().pair_cap;
    global_caps().pair_cap = 0;
    try {
        Ideal id = I(r, {"x^2+y", "xy+1"});
        (void)id.reduced_gb();
        global_caps().pair_cap = saved;
        FAIL("expected PairCapExceeded");
    } catch (const Error& e) {
        global_caps().pair_cap = saved;
        CHECK(e.kind() == ErrorKind::PairCapExceeded);
    }
}

TEST_CASE("lex order is available behind the flag") {
    auto r = ring_xy(5);
    MonomialOrder lex{OrderKind::lex};
    // x > y^k under lex, so x eliminates
    Ideal id(r, {P(r, "x+y^2"), P(r, "xy")}, lex);
    const auto& gb = id.reduced_gb();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == P(r, "x+y^2"));
    CHECK(gb[1] == P(r, "y^3"));
}

TEST_CASE("binomial expansion lemma via Lucas products") {
    // (x-y)^{p^m-n-1} = (-1)^n sum_r binom(n+r, n) x^r y^{p^m-n-r-1}
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto r = ring_xy(p);
        Polynomial x = P(r, "x"), y = P(r, "y");
        for (int m = 1; m <= 2; ++m) {
            std::int64_t pm = 1;
            for (int i = 0; i < m; ++i) pm *= p;
            for (std::int64_t n = 0; n < pm; ++n) {
                Polynomial lhs = (x - y).pow(pm - n - 1);
                Polynomial rhs(r);
                for (std::int64_t rr = 0; rr <= pm - n - 1; ++rr) {
                    // digit-product coefficient
                    PadicRational nr = make_padic(n + rr, 1, p);
                    fp_t c = lucas_binomial(nr, n);
                    Polynomial term = x.pow(rr) * y.pow(pm - n - rr - 1);
                    rhs = rhs + term.scaled(c);
                }
                if (n % 2 == 1) rhs = -rhs;
                CHECK(lhs == rhs);
            }
        }
    }
}
