#include "fcart/graph_bf.hpp"

#include "fcart/caps.hpp"
#include "fcart/error.hpp"

namespace fcart {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
        v *= b;
        check_exp_cap(v);
    }
    return v;
}

void insert_term(BfElement& x, std::int64_t m, const Polynomial& c) {
    if (c.is_zero() || m < 0) return;
    auto it = x.support.find(m);
    if (it == x.support.end()) {
        x.support.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) x.support.erase(it);
    }
}

void check_compatible(const BfElement& a, const BfElement& b) {
    require_same_ring(a.ring, b.ring);
    if (!(a.f == b.f))
        raise(ErrorKind::InvalidArgument, "B_f elements built from different f");
}

} // namespace

bool BfElement::operator==(const BfElement& o) const {
    return same_ring(ring, o.ring) && f == o.f && support == o.support;
}

BfElement bf_zero(const RingPtr& ring, const Polynomial& f) {
    if (f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "B_f is undefined for f = 0");
    return BfElement{ring, f, {}};
}

BfElement bf_delta(const RingPtr& ring, const Polynomial& f, std::int64_t m,
                   const Polynomial& coeff) {
    BfElement x = bf_zero(ring, f);
    insert_term(x, m, coeff);
    return x;
}

BfElement bf_add(const BfElement& a, const BfElement& b) {
    check_compatible(a, b);
    BfElement r = a;
    for (const auto& [m, c] : b.support) insert_term(r, m, c);
    return r;
}

BfElement bf_scale(const BfElement& a, const Polynomial& c) {
    BfElement r = bf_zero(a.ring, a.f);
    for (const auto& [m, coeff] : a.support) insert_term(r, m, coeff * c);
    return r;
}

BfElement fmt_action(const BfElement& x) {
    BfElement r = bf_zero(x.ring, x.f);
    for (const auto& [m, c] : x.support) insert_term(r, m - 1, c);
    return r;
}

BfElement t_action(const BfElement& x) {
    BfElement r = bf_scale(x, x.f);
    for (const auto& [m, c] : x.support) insert_term(r, m - 1, -c);
    return r;
}

BfElement partial_divided(const BfElement& x, std::int64_t k) {
    const fp_t p = x.ring->p;
    BfElement r = bf_zero(x.ring, x.f);
    for (const auto& [m, c] : x.support) {
        fp_t b = fp_binomial(m + k, k, p);
        if (b != 0) insert_term(r, m + k, c.scaled(b));
    }
    return r;
}

BfElement theta_prime_power(const BfElement& x, int i) {
    if (i < 0) raise(ErrorKind::IndexOutOfRange, "theta index must be >= 0");
    const fp_t p = x.ring->p;
    std::int64_t pi = ipow(p, i);
    // t^{p^i}·x = f^{p^i}·x - (f-t)^{p^i}·x
    BfElement tpow = bf_scale(x, x.f.frobenius(pi));
    for (const auto& [m, c] : x.support) insert_term(tpow, m - pi, -c);
    return partial_divided(tpow, pi);
}

namespace {

BfElement q_element_by_action(const RingPtr& ring, const Polynomial& f, int m,
                              std::int64_t n) {
    const std::int64_t pm = ipow(ring->p, m);
    BfElement x = bf_delta(ring, f, pm - 1, Polynomial::constant(ring, 1));
    for (std::int64_t k = 0; k < pm - n - 1; ++k) x = t_action(x);
    return x;
}

BfElement q_element_closed_form(const RingPtr& ring, const Polynomial& f, int m,
                                std::int64_t n) {
    const fp_t p = ring->p;
    const std::int64_t pm = ipow(p, m);
    (void)pm;
    // digits of n
    std::vector<std::int64_t> nd(std::size_t(m), 0);
    std::int64_t v = n;
    for (int i = 0; i < m; ++i) {
        nd[std::size_t(i)] = v % p;
        v /= p;
    }
    BfElement acc = bf_zero(ring, f);
    // sum over digit tuples r_i in [0, p - n_i - 1]
    std::vector<std::int64_t> r(std::size_t(m), 0);
    while (true) {
        fp_t coeff = 1;
        std::int64_t rsum = 0, ppow = 1;
        for (int i = 0; i < m; ++i) {
            coeff = fp_mul(coeff, fp_binomial(nd[std::size_t(i)] + r[std::size_t(i)],
                                              nd[std::size_t(i)], p), p);
            rsum += r[std::size_t(i)] * ppow;
            ppow *= p;
        }
        Polynomial term = f.pow(rsum).scaled(coeff);
        insert_term(acc, n + rsum, term);
        // advance the digit tuple
        int pos = 0;
        while (pos < m) {
            if (r[std::size_t(pos)] < p - 1 - nd[std::size_t(pos)]) {
                ++r[std::size_t(pos)];
                break;
            }
            r[std::size_t(pos)] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    // global sign (-1)^n
    if (n % 2 == 1) acc = bf_scale(acc, Polynomial::constant(ring, -1));
    return acc;
}

} // namespace

BfElement q_element(const RingPtr& ring, const Polynomial& f, int m, std::int64_t n) {
    if (f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "B_f is undefined for f = 0");
    if (m < 1) raise(ErrorKind::IndexOutOfRange, "level m must be >= 1");
    const std::int64_t pm = ipow(ring->p, m);
    if (n < 0 || n > pm - 1) raise(ErrorKind::IndexOutOfRange, "need 0 <= n <= p^m - 1");
    BfElement by_action = q_element_by_action(ring, f, m, n);
    BfElement closed = q_element_closed_form(ring, f, m, n);
    if (!(by_action == closed))
        raise(ErrorKind::InternalMismatch,
              "Q_n^{(m)} construction paths disagree at n=" + std::to_string(n));
    return by_action;
}

bool verify_t_shift(const RingPtr& ring, const Polynomial& f, int m, std::int64_t n) {
    const std::int64_t pm = ipow(ring->p, m);
    if (n < 0 || n > pm - 1) raise(ErrorKind::IndexOutOfRange, "need 0 <= n <= p^m - 1");
    BfElement qn = q_element(ring, f, m, n);
    BfElement lhs = t_action(qn);
    if (n >= 1) return lhs == q_element(ring, f, m, n - 1);
    BfElement rhs = bf_scale(q_element(ring, f, m, pm - 1), f.frobenius(pm));
    return lhs == rhs;
}

bool verify_transition(const RingPtr& ring, const Polynomial& f, int m, std::int64_t n) {
    const fp_t p = ring->p;
    const std::int64_t pm = ipow(p, m);
    if (n < 0 || n > pm - 1) raise(ErrorKind::IndexOutOfRange, "need 0 <= n <= p^m - 1");
    ipow(p, m + 1);
    BfElement lhs = q_element(ring, f, m, n);
    BfElement rhs = bf_zero(ring, f);
    for (std::int64_t i = 0; i < p; ++i) {
        fp_t c = fp_binomial(p - 1, i, p);
        if (i % 2 == 1) c = fp_neg(c, p);
        BfElement piece = bf_scale(q_element(ring, f, m + 1, n + i * pm),
                                   f.pow(i * pm).scaled(c));
        rhs = bf_add(rhs, piece);
    }
    return lhs == rhs;
}

bool verify_theta_eigenvalue(const RingPtr& ring, const Polynomial& f, int m,
                             std::int64_t n) {
    const fp_t p = ring->p;
    const std::int64_t pm = ipow(p, m);
    if (n < 0 || n > pm - 1) raise(ErrorKind::IndexOutOfRange, "need 0 <= n <= p^m - 1");
    BfElement qn = q_element(ring, f, m, n);
    std::int64_t v = n;
    for (int i = 0; i < m; ++i) {
        std::int64_t ni = v % p;
        v /= p;
        BfElement lhs = theta_prime_power(qn, i);
        BfElement rhs = bf_scale(qn, Polynomial::constant(ring, -ni));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace fcart
