#ifndef FCART_GRAPH_BF_HPP
#define FCART_GRAPH_BF_HPP

#include <cstdint>
#include <map>

#include "fcart/polynomial.hpp"

namespace fcart {

// Element of B_f = ⊕_{m>=0} R·δ_m with δ_m = (f-t)^{-m-1} and δ_{-1} = 0.
// Action laws: (f-t)·δ_m = δ_{m-1}, so t·δ_m = f·δ_m - δ_{m-1}.
struct BfElement {
    RingPtr ring;
    Polynomial f;
    std::map<std::int64_t, Polynomial> support; // index m -> coefficient of δ_m

    bool is_zero() const { return support.empty(); }
    bool operator==(const BfElement& o) const;
};

BfElement bf_zero(const RingPtr& ring, const Polynomial& f);
BfElement bf_delta(const RingPtr& ring, const Polynomial& f, std::int64_t m,
                   const Polynomial& coeff);

BfElement bf_add(const BfElement& a, const BfElement& b);
BfElement bf_scale(const BfElement& a, const Polynomial& c);

// (f - t)·x: shifts indices down one
BfElement fmt_action(const BfElement& x);
// t·x = f·x - shift_down(x)
BfElement t_action(const BfElement& x);

// divided-power operator in the t-variable: ∂^[k](c·δ_m) = binom(m+k,k)·c·δ_{m+k}
BfElement partial_divided(const BfElement& x, std::int64_t k);

// ϑ_{p^i} = ∂^[p^i]·t^{p^i}, using t^{p^i} = f^{p^i} - (f-t)^{p^i}
BfElement theta_prime_power(const BfElement& x, int i);

// Q_n^{(m)} = t^{p^m-n-1}·δ_{p^m-1}, built two ways (iterated t-action and
// the digit-product closed form); InternalMismatch if the paths ever differ.
BfElement q_element(const RingPtr& ring, const Polynomial& f, int m, std::int64_t n);

// t·Q_n = Q_{n-1} for n >= 1; t·Q_0 = f^{p^m}·Q_{p^m-1}
bool verify_t_shift(const RingPtr& ring, const Polynomial& f, int m, std::int64_t n);

// Q_n^{(m)} = Σ_{i=0}^{p-1} (-1)^i binom(p-1,i) f^{i p^m} Q_{n+i p^m}^{(m+1)}
bool verify_transition(const RingPtr& ring, const Polynomial& f, int m, std::int64_t n);

// ϑ_{p^i}(Q_n^{(m)}) = -n_i·Q_n^{(m)} for every digit position i < m
bool verify_theta_eigenvalue(const RingPtr& ring, const Polynomial& f, int m,
                             std::int64_t n);

} // namespace fcart

#endif
