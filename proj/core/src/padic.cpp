#include "fcart/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>

#include "fcart/error.hpp"

namespace fcart {

using boost::multiprecision::cpp_int;

namespace {

std::int64_t to_int64_checked(const cpp_int& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        raise(ErrorKind::Overflow, std::string(what) + " exceeds 64-bit range");
    return std::int64_t(v);
}

cpp_int mod_inverse(const cpp_int& a, const cpp_int& m) {
    // extended Euclid; a must be invertible mod m
    cpp_int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    cpp_int old_s = 1, s = 0;
    while (r != 0) {
        cpp_int qt = old_r / r;
        cpp_int tmp = old_r - qt * r;
        old_r = r;
        r = tmp;
        tmp = old_s - qt * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        raise(ErrorKind::DenominatorNotInvertible, "denominator not invertible");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

} // namespace

fp_t prime_of_power(std::int64_t q) {
    if (q < 2) raise(ErrorKind::InvalidQ, "q must be >= 2");
    std::int64_t v = q;
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = v; // q itself prime
    while (v % p == 0) v /= p;
    if (v != 1)
        raise(ErrorKind::InvalidQ, std::to_string(q) + " is not a prime power");
    return fp_t(p);
}

PadicRational make_padic(std::int64_t num, std::int64_t den, fp_t p) {
    if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (den == 0) raise(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den % p == 0)
        raise(ErrorKind::DenominatorNotInvertible,
              "denominator divisible by p: not an element of Z_(p)");
    return PadicRational{num, den, p};
}

PadicRational parse_padic(const std::string& text, fp_t p) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return make_padic(std::stoll(text), 1, p);
        return make_padic(std::stoll(text.substr(0, slash)),
                          std::stoll(text.substr(slash + 1)), p);
    } catch (const std::invalid_argument&) {
        raise(ErrorKind::SyntaxError, "bad rational literal '" + text + "'");
    } catch (const std::out_of_range&) {
        raise(ErrorKind::Overflow, "rational literal out of range '" + text + "'");
    }
}

std::string PadicRational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int padic_cmp(const PadicRational& x, std::int64_t a, std::int64_t b) {
    if (b < 0) {
        a = -a;
        b = -b;
    }
    cpp_int lhs = cpp_int(x.num) * b;
    cpp_int rhs = cpp_int(a) * x.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::int64_t digits(const PadicRational& alpha, int m, std::int64_t q) {
    if (m < 1) raise(ErrorKind::InvalidArgument, "digit level m must be >= 1");
    fp_t qp = prime_of_power(q);
    if (qp != alpha.p) raise(ErrorKind::InvalidQ, "q is not a power of alpha's prime");
    cpp_int Q = 1;
    for (int i = 0; i < m; ++i) Q *= q;
    cpp_int n = alpha.num % Q;
    if (n < 0) n += Q;
    cpp_int inv = mod_inverse(cpp_int(alpha.den), Q);
    cpp_int r = (n * inv) % Q;
    return to_int64_checked(r, "alpha_m");
}

std::int64_t digit_at(const PadicRational& alpha, int i, std::int64_t q) {
    std::int64_t lo = i == 0 ? 0 : digits(alpha, i, q);
    std::int64_t hi = digits(alpha, i + 1, q);
    std::int64_t qi = 1;
    for (int k = 0; k < i; ++k) qi *= q;
    return (hi - lo) / qi;
}

fp_t lucas_binomial(const PadicRational& alpha, std::int64_t n) {
    if (n < 0) raise(ErrorKind::InvalidArgument, "n must be >= 0");
    const fp_t p = alpha.p;
    if (n == 0) return 1;
    // enough digits of alpha to cover the digits of n
    int m = 0;
    std::int64_t v = n;
    while (v > 0) {
        v /= p;
        ++m;
    }
    std::int64_t am = digits(alpha, m, p);
    fp_t result = 1;
    std::int64_t nn = n;
    for (int i = 0; i < m; ++i) {
        std::int64_t ad = am % p, nd = nn % p;
        result = fp_mul(result, fp_binomial(ad, nd, p), p);
        am /= p;
        nn /= p;
    }
    return result;
}

fp_t theta_eigenvalue(const PadicRational& alpha, std::int64_t n) {
    fp_t b = lucas_binomial(alpha, n);
    return (n % 2 == 0) ? b : fp_neg(b, alpha.p);
}

PadicRational T_map(const PadicRational& alpha, std::int64_t q) {
    std::int64_t i = digits(alpha, 1, q);
    // (alpha - i)/q: numerator num - i*den is divisible by q after reduction
    cpp_int num = cpp_int(alpha.num) - cpp_int(i) * alpha.den;
    cpp_int den = cpp_int(alpha.den) * q;
    cpp_int g = gcd(num < 0 ? cpp_int(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return make_padic(to_int64_checked(num, "T(alpha) numerator"),
                      to_int64_checked(den, "T(alpha) denominator"), alpha.p);
}

DigitBlock digit_block(const PadicRational& alpha, std::int64_t q) {
    prime_of_power(q); // validates
    DigitBlock block;
    block.base = q;
    // The state T^k(alpha) determines the digit tail, so the first repeated
    // state marks both the minimal preperiod and the minimal period.
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
    std::vector<std::int64_t> stream;
    PadicRational cur = alpha;
    while (true) {
        if (stream.size() > 1000000)
            raise(ErrorKind::IterationCapExceeded, "digit stream failed to cycle");
        auto key = std::make_pair(cur.num, cur.den);
        auto it = seen.find(key);
        if (it != seen.end()) {
            std::size_t start = it->second;
            block.preperiod.assign(stream.begin(), stream.begin() + start);
            block.period.assign(stream.begin() + start, stream.end());
            return block;
        }
        seen.emplace(key, stream.size());
        stream.push_back(digits(cur, 1, q));
        cur = T_map(cur, q);
    }
}

PadicRational from_periodic_digits(const DigitBlock& block) {
    const std::int64_t q = block.base;
    fp_t p = prime_of_power(q);
    if (block.period.empty()) raise(ErrorKind::EmptyPeriod, "period must be nonempty");
    for (std::int64_t d : block.preperiod)
        if (d < 0 || d >= q) raise(ErrorKind::InvalidArgument, "digit out of range");
    for (std::int64_t d : block.period)
        if (d < 0 || d >= q) raise(ErrorKind::InvalidArgument, "digit out of range");

    // alpha = A + q^k * B/(1 - q^j), digits low to high
    cpp_int A = 0, qk = 1;
    for (std::int64_t d : block.preperiod) {
        A += qk * d;
        qk *= q;
    }
    cpp_int B = 0, qi = 1;
    for (std::int64_t d : block.period) {
        B += qi * d;
        qi *= q;
    }
    cpp_int qj = qi; // q^period_len
    // alpha = [A*(1 - q^j) + q^k * B] / (1 - q^j)
    cpp_int num = A * (1 - qj) + qk * B;
    cpp_int den = 1 - qj;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    cpp_int g = gcd(num < 0 ? cpp_int(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return make_padic(to_int64_checked(num, "numerator"),
                      to_int64_checked(den, "denominator"), p);
}

} // namespace fcart
