#include "fcart/fp.hpp"

namespace fcart {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

namespace {

// binom(a, b) mod p for 0 <= a, b < p
fp_t small_binomial(fp_t a, fp_t b, fp_t p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    fp_t num = 1, den = 1;
    for (fp_t i = 1; i <= b; ++i) {
        num = fp_mul(num, a + 1 - i, p);
        den = fp_mul(den, i, p);
    }
    return fp_mul(num, fp_inv(den, p), p);
}

} // namespace

fp_t fp_binomial(std::int64_t a, std::int64_t b, fp_t p) {
    if (b < 0 || a < 0) return 0;
    if (b > a) return 0;
    // Lucas digit product
    fp_t r = 1;
    while (a > 0 || b > 0) {
        fp_t ad = fp_t(a % p), bd = fp_t(b % p);
        if (bd > ad) return 0;
        r = fp_mul(r, small_binomial(ad, bd, p), p);
        a /= p;
        b /= p;
    }
    return r;
}

} // namespace fcart
