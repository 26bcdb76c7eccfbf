#ifndef FCART_PADIC_HPP
#define FCART_PADIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fcart/fp.hpp"

namespace fcart {

// Element of Z_(p) = Z_p ∩ Q: reduced fraction with positive denominator
// prime to p. The base-q digit stream of such a value is eventually periodic.
struct PadicRational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    fp_t p = 2;

    bool operator==(const PadicRational& o) const {
        return num == o.num && den == o.den && p == o.p;
    }
    bool is_integer() const { return den == 1; }
    std::string str() const;
};

PadicRational make_padic(std::int64_t num, std::int64_t den, fp_t p);
PadicRational parse_padic(const std::string& text, fp_t p);

// exact comparisons against a rational a/b
int padic_cmp(const PadicRational& x, std::int64_t a, std::int64_t b);

// alpha_m: the unique integer in [0, q^m) with alpha - alpha_m in q^m Z_p.
// q must be a power of alpha.p.
std::int64_t digits(const PadicRational& alpha, int m, std::int64_t q);

// single base-q digit at position i (digit 0 is the units digit)
std::int64_t digit_at(const PadicRational& alpha, int i, std::int64_t q);

// binom(alpha, n) mod p via the Lucas digit product
fp_t lucas_binomial(const PadicRational& alpha, std::int64_t n);

// ev_alpha(theta_n) = (-1)^n binom(alpha, n) mod p
fp_t theta_eigenvalue(const PadicRational& alpha, std::int64_t n);

// T(alpha) = (alpha - alpha_1)/q
PadicRational T_map(const PadicRational& alpha, std::int64_t q);

struct DigitBlock {
    std::vector<std::int64_t> preperiod;
    std::vector<std::int64_t> period; // nonempty, minimal
    std::int64_t base = 2;            // q, a prime power
};

// canonical (minimal preperiod and period) base-q digit block of alpha,
// computed from the T-orbit
DigitBlock digit_block(const PadicRational& alpha, std::int64_t q);

// the unique element of Z_(p) whose base-q digit stream is
// preperiod . (period repeating); q = block.base must be a prime power
PadicRational from_periodic_digits(const DigitBlock& block);

// the prime p with q = p^e; throws InvalidQ if q is not a prime power
fp_t prime_of_power(std::int64_t q);

} // namespace fcart

#endif
