#include "fcart/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace fcart {

std::int64_t total_degree(const Monomial& m) {
    std::int64_t d = 0;
    for (auto v : m.e) d += v;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    assert(mono_divides(a, b));
    Monomial r(b.nvars());
    for (std::size_t i = 0; i < b.nvars(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

Monomial mono_pow_scale(const Monomial& a, std::int64_t k) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] * k;
    return r;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    switch (kind) {
        case OrderKind::grevlex: {
            std::int64_t da = total_degree(a), db = total_degree(b);
            if (da != db) return da > db ? 1 : -1;
            // ties: last differing variable, smaller exponent wins
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::lex: {
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

const char* order_name(OrderKind k) {
    return k == OrderKind::grevlex ? "grevlex" : "lex";
}

} // namespace fcart
