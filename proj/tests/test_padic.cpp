#include <doctest.h>

#include "fcart/error.hpp"
#include "fcart/oracle.hpp"
#include "fcart/padic.hpp"
#include "fcart/random.hpp"

using namespace fcart;

TEST_CASE("digits: worked examples") {
    CHECK(digits(make_padic(-1, 1, 3), 2, 3) == 8);
    CHECK(digits(make_padic(-5, 6, 7), 2, 7) == 40); // digits 5,5
    CHECK(digits(make_padic(0, 1, 5), 3, 5) == 0);
    CHECK(digit_at(make_padic(-5, 6, 7), 0, 7) == 5);
    CHECK(digit_at(make_padic(-5, 6, 7), 1, 7) == 5);
}

TEST_CASE("Z_(p) membership is enforced") {
    CHECK_THROWS_AS(make_padic(1, 2, 2), Error);
    CHECK_THROWS_AS(make_padic(3, 14, 7), Error);
    CHECK(make_padic(2, -4, 3) == make_padic(-1, 2, 3));
}

TEST_CASE("lucas_binomial: worked examples") {
    CHECK(lucas_binomial(make_padic(-1, 1, 5), 7) == 4); // (-1)^7 = -1 = 4 mod 5
    CHECK(lucas_binomial(make_padic(-5, 6, 7), 7) == 5);
    // Lucas vanishing: digit comparison fails
    CHECK(lucas_binomial(make_padic(2, 1, 5), 3) == 0);
    CHECK(lucas_binomial(make_padic(6, 1, 5), 8) == 0); // digits (1,1) vs (3,1)
}

TEST_CASE("theta_eigenvalue: worked examples") {
    CHECK(theta_eigenvalue(make_padic(-5, 6, 7), 1) == 2); // -a_0 = -5 = 2 mod 7
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5)}) {
        std::int64_t pi = 1;
        for (int i = 0; i < 3; ++i) {
            CHECK(theta_eigenvalue(make_padic(-1, 1, p), pi) == 1); // -(p-1) = 1
            pi *= p;
        }
    }
    CHECK(theta_eigenvalue(make_padic(0, 1, 3), 1) == 0);
    CHECK(theta_eigenvalue(make_padic(0, 1, 3), 5) == 0);
}

TEST_CASE("theta eigenvalue reads off digits") {
    // ev_alpha(theta_{p^i}) = -a_i
    Rng rng(211);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::int64_t den = rng.uniform(1, 40);
            while (den % p == 0) den = rng.uniform(1, 40);
            PadicRational alpha = make_padic(rng.uniform(-40, 40), den, p);
            std::int64_t pi = 1;
            for (int i = 0; i < 3; ++i) {
                fp_t expected = fp_neg(fp_t(digit_at(alpha, i, p)), p);
                CHECK(theta_eigenvalue(alpha, pi) == expected);
                pi *= p;
            }
        }
    }
}

TEST_CASE("T_map: worked examples") {
    CHECK(T_map(make_padic(-5, 6, 7), 7) == make_padic(-5, 6, 7));
    for (std::int64_t q : {2, 3, 4, 9}) {
        fp_t p = prime_of_power(q);
        CHECK(T_map(make_padic(-1, 1, p), q) == make_padic(-1, 1, p));
    }
    CHECK(T_map(make_padic(2, 1, 3), 3) == make_padic(0, 1, 3));
}

TEST_CASE("from_periodic_digits: worked examples") {
    SUBCASE("pure period [5] base 7") {
        DigitBlock b{{}, {5}, 7};
        CHECK(from_periodic_digits(b) == make_padic(-5, 6, 7));
    }
    SUBCASE("pure period [q-1] is -1") {
        for (std::int64_t q : {2, 3, 4, 7, 9}) {
            DigitBlock b{{}, {q - 1}, q};
            CHECK(from_periodic_digits(b) == make_padic(-1, 1, prime_of_power(q)));
        }
    }
    SUBCASE("terminating expansion") {
        DigitBlock b{{1}, {0}, 3};
        CHECK(from_periodic_digits(b) == make_padic(1, 1, 3));
    }
    SUBCASE("empty period is rejected") {
        DigitBlock b{{1}, {}, 3};
        CHECK_THROWS_AS(from_periodic_digits(b), Error);
    }
    SUBCASE("q must be a prime power") {
        DigitBlock b{{}, {1}, 6};
        CHECK_THROWS_AS(from_periodic_digits(b), Error);
    }
}

TEST_CASE("digit round-trip: 500 random per p") {
    Rng rng(223);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        for (int trial = 0; trial < 500; ++trial) {
            std::int64_t den = rng.uniform(1, 50);
            while (den % p == 0) den = rng.uniform(1, 50);
            PadicRational alpha = make_padic(rng.uniform(-50, 50), den, p);
            DigitBlock block = digit_block(alpha, p);
            CHECK(from_periodic_digits(block) == alpha);
            // the minimal period is the multiplicative order of p modulo the
            // denominator of the periodic tail
            PadicRational tail = alpha;
            for (std::size_t i = 0; i < block.preperiod.size(); ++i) tail = T_map(tail, p);
            if (tail.den > 1) {
                std::int64_t ord = 1, pw = p % tail.den;
                while (pw != 1) {
                    pw = (pw * p) % tail.den;
                    ++ord;
                }
                CHECK(std::int64_t(block.period.size()) == ord);
            } else {
                CHECK(block.period.size() == 1); // integer tail: 0 or -1 digits
            }
        }
    }
}

TEST_CASE("digit blocks round-trip against digits()") {
    Rng rng(227);
    for (std::int64_t q : {2, 3, 4, 9}) {
        fp_t p = prime_of_power(q);
        for (int trial = 0; trial < 100; ++trial) {
            std::int64_t den = rng.uniform(1, 30);
            while (den % p == 0) den = rng.uniform(1, 30);
            PadicRational alpha = make_padic(rng.uniform(-30, 30), den, p);
            DigitBlock block = digit_block(alpha, q);
            // reconstructed digit stream agrees with digits() prefixes
            std::int64_t qm = 1, acc = 0;
            for (int m = 1; m <= 6; ++m) {
                std::size_t i = std::size_t(m - 1);
                std::int64_t d =
                    i < block.preperiod.size()
                        ? block.preperiod[i]
                        : block.period[(i - block.preperiod.size()) % block.period.size()];
                acc += d * qm;
                qm *= q;
                CHECK(digits(alpha, m, q) == acc);
            }
        }
    }
}

TEST_CASE("lucas vs truncation oracle: 500 random pairs per p") {
    Rng rng(229);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        for (int trial = 0; trial < 500; ++trial) {
            std::int64_t den = rng.uniform(1, 50);
            while (den % p == 0) den = rng.uniform(1, 50);
            PadicRational alpha = make_padic(rng.uniform(-50, 50), den, p);
            std::int64_t n = rng.uniform(0, 300);
            int m = 1;
            std::int64_t pm = p;
            while (pm <= n) {
                pm *= p;
                ++m;
            }
            CHECK(lucas_binomial(alpha, n) ==
                  oracle::bignum_binomial_mod(digits(alpha, m, p), n, p));
        }
    }
}

TEST_CASE("Pascal recurrence mod p") {
    Rng rng(233);
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::int64_t den = rng.uniform(1, 50);
            while (den % p == 0) den = rng.uniform(1, 50);
            std::int64_t num = rng.uniform(-50, 50);
            PadicRational alpha = make_padic(num, den, p);
            PadicRational alpha_minus_1 = make_padic(num - den, den, p);
            std::int64_t n = rng.uniform(1, 60);
            CHECK(lucas_binomial(alpha, n) ==
                  fp_add(lucas_binomial(alpha_minus_1, n),
                         lucas_binomial(alpha_minus_1, n - 1), p));
        }
    }
}

TEST_CASE("T-map digit shift") {
    Rng rng(239);
    for (std::int64_t q : {2, 3, 4, 7, 9}) {
        fp_t p = prime_of_power(q);
        for (int trial = 0; trial < 100; ++trial) {
            std::int64_t den = rng.uniform(1, 40);
            while (den % p == 0) den = rng.uniform(1, 40);
            PadicRational alpha = make_padic(rng.uniform(-40, 40), den, p);
            std::int64_t a1 = digits(alpha, 1, q);
            PadicRational t = T_map(alpha, q);
            for (int m = 1; m <= 4; ++m)
                CHECK(digits(t, m, q) == (digits(alpha, m + 1, q) - a1) / q);
        }
    }
}

TEST_CASE("fixed points of T over q are exactly -a/(q-1)") {
    for (std::int64_t q : {2, 3, 4, 7, 9}) {
        fp_t p = prime_of_power(q);
        for (std::int64_t a = 0; a < q; ++a)
            CHECK(T_map(make_padic(-a, q - 1, p), q) == make_padic(-a, q - 1, p));
        for (std::int64_t num = -25; num <= 25; ++num) {
            for (std::int64_t den = 1; den <= 25; ++den) {
                if (den % p == 0) continue;
                PadicRational alpha = make_padic(num, den, p);
                bool in_family = false;
                for (std::int64_t a = 0; a < q; ++a)
                    if (alpha == make_padic(-a, q - 1, p)) in_family = true;
                CHECK((T_map(alpha, q) == alpha) == in_family);
            }
        }
    }
}

TEST_CASE("rational literal parsing") {
    CHECK(parse_padic("-5/6", 7) == make_padic(-5, 6, 7));
    CHECK(parse_padic("3", 5) == make_padic(3, 1, 5));
    CHECK_THROWS_AS(parse_padic("1/7", 7), Error);
    CHECK_THROWS_AS(parse_padic("x", 7), Error);
    CHECK(make_padic(-5, 6, 7).str() == "-5/6");
    CHECK(make_padic(-1, 1, 7).str() == "-1");
}
