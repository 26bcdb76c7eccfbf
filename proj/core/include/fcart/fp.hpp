#ifndef FCART_FP_HPP
#define FCART_FP_HPP

#include <cstdint>

namespace fcart {

// Residues mod p are stored reduced in [0, p). p < 2^31 so products fit in
// uint64 without overflow.
using fp_t = std::uint32_t;

bool is_prime(std::uint64_t n);

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p) s -= p;
    return fp_t(s);
}

inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) {
    return a >= b ? a - b : fp_t(std::uint64_t(a) + p - b);
}

inline fp_t fp_neg(fp_t a, fp_t p) { return a == 0 ? 0 : p - a; }

inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) {
    return fp_t((std::uint64_t(a) * b) % p);
}

inline fp_t fp_pow(fp_t a, std::uint64_t n, fp_t p) {
    fp_t r = 1 % p;
    while (n) {
        if (n & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        n >>= 1;
    }
    return r;
}

// inverse of a != 0; p prime
inline fp_t fp_inv(fp_t a, fp_t p) { return fp_pow(a, p - 2, p); }

// reduce an arbitrary signed integer into [0, p)
inline fp_t fp_reduce(std::int64_t v, fp_t p) {
    std::int64_t r = v % std::int64_t(p);
    if (r < 0) r += p;
    return fp_t(r);
}

// binom(a, b) mod p for machine integers 0 <= b, via the multiplicative
// formula over F_p; returns 0 when a p-adic carry blocks it (a < b included).
fp_t fp_binomial(std::int64_t a, std::int64_t b, fp_t p);

} // namespace fcart

#endif
