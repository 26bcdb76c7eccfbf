#ifndef FCART_MONOMIAL_HPP
#define FCART_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace fcart {

// Exponent vector of length nvars. Exponents stay well under 2^62 given the
// q^m <= FCART_EXP_CAP budget, so plain int64 arithmetic is exact.
struct Monomial {
    std::vector<std::int64_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::int64_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

std::int64_t total_degree(const Monomial& m);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);   // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);   // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_pow_scale(const Monomial& a, std::int64_t k); // componentwise * k

enum class OrderKind { grevlex, lex };

struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;

    bool operator==(const MonomialOrder& o) const { return kind == o.kind; }

    // three-way compare: +1 if a > b, 0 if equal, -1 if a < b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

const char* order_name(OrderKind k);

} // namespace fcart

#endif
