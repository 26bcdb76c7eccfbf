#include "fcart/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "fcart/caps.hpp"
#include "fcart/error.hpp"

namespace fcart {

namespace {

// Engine-local representation: term vector sorted descending under the
// requested order (which may differ from the canonical grevlex storage).
struct EPoly {
    std::vector<Term> t;

    bool empty() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    fp_t lc() const { return t.front().c; }
    std::int64_t deg() const {
        std::int64_t d = -1;
        for (const auto& term : t) d = std::max(d, total_degree(term.m));
        return d;
    }
};

EPoly to_engine(const Polynomial& f, const MonomialOrder& ord) {
    EPoly e;
    e.t = f.terms();
    std::sort(e.t.begin(), e.t.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    return e;
}

Polynomial from_engine(const RingPtr& ring, const EPoly& e) {
    return Polynomial(ring, e.t);
}

EPoly esub(const EPoly& a, const EPoly& b, const MonomialOrder& ord, fp_t p) {
    EPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = ord.cmp(a.t[i].m, b.t[j].m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back({b.t[j].m, fp_neg(b.t[j].c, p)});
            ++j;
        } else {
            fp_t s = fp_sub(a.t[i].c, b.t[j].c, p);
            if (s != 0) r.t.push_back({a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back({b.t[j].m, fp_neg(b.t[j].c, p)});
    return r;
}

// a - (c * x^m) * b
EPoly esub_scaled(const EPoly& a, const EPoly& b, const Monomial& m, fp_t c,
                  const MonomialOrder& ord, fp_t p) {
    EPoly shifted;
    shifted.t.reserve(b.t.size());
    for (const auto& term : b.t)
        shifted.t.push_back({mono_mul(term.m, m), fp_mul(term.c, c, p)});
    return esub(a, shifted, ord, p);
}

void make_monic(EPoly& f, fp_t p) {
    if (f.empty()) return;
    fp_t lc = f.lc();
    if (lc == 1) return;
    fp_t inv = fp_inv(lc, p);
    for (auto& t : f.t) t.c = fp_mul(t.c, inv, p);
}

// Full normal form; reduces every term, not just the lead.
EPoly nf(const EPoly& f, const std::vector<EPoly>& G, const MonomialOrder& ord, fp_t p,
         const std::vector<std::int64_t>* sugar_vec = nullptr,
         std::int64_t* f_sugar = nullptr) {
    EPoly h = f;
    EPoly r;
    while (!h.empty()) {
        bool divided = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (G[i].empty()) continue;
            if (mono_divides(G[i].lm(), h.lm())) {
                Monomial quot = mono_div(h.lm(), G[i].lm());
                fp_t c = fp_mul(h.lc(), fp_inv(G[i].lc(), p), p);
                if (sugar_vec && f_sugar) {
                    std::int64_t lm_deg = total_degree(h.lm());
                    *f_sugar = std::max(*f_sugar, (*sugar_vec)[i] + lm_deg -
                                                      total_degree(G[i].lm()));
                }
                h = esub_scaled(h, G[i], quot, c, ord, p);
                divided = true;
                break;
            }
        }
        if (!divided) {
            r.t.push_back(h.t.front());
            h.t.erase(h.t.begin());
        }
    }
    return r;
}

struct CriticalPair {
    std::size_t i, j;
    std::int64_t sugar;
    std::int64_t lcm_deg;
};

// Gebauer-Moller update: add h, prune old pairs by the chain criterion, prune
// new pairs to minimal lcms, drop coprime-lead pairs.
void update(std::vector<EPoly>& G, std::vector<CriticalPair>& pairs, EPoly h,
            std::vector<std::int64_t>& sugar_vec, std::int64_t h_sugar,
            const MonomialOrder& ord) {
    (void)ord;
    const std::size_t new_idx = G.size();
    const Monomial& lm_h = h.lm();

    std::vector<CriticalPair> new_pairs;
    std::vector<Monomial> new_lcms;
    for (std::size_t k = 0; k < G.size(); ++k) {
        Monomial L = mono_lcm(G[k].lm(), lm_h);
        std::int64_t s = std::max(sugar_vec[k] + total_degree(L) - total_degree(G[k].lm()),
                                  h_sugar + total_degree(L) - total_degree(lm_h));
        new_pairs.push_back({k, new_idx, s, total_degree(L)});
        new_lcms.push_back(std::move(L));
    }

    // chain criterion against existing pairs
    std::vector<CriticalPair> kept;
    kept.reserve(pairs.size());
    for (const auto& cp : pairs) {
        Monomial L_ij = mono_lcm(G[cp.i].lm(), G[cp.j].lm());
        if (mono_divides(lm_h, L_ij)) {
            Monomial L_ih = mono_lcm(G[cp.i].lm(), lm_h);
            Monomial L_hj = mono_lcm(lm_h, G[cp.j].lm());
            if (L_ih != L_ij && L_hj != L_ij) continue;
        }
        kept.push_back(cp);
    }
    pairs = std::move(kept);

    // keep only minimal lcms among the new pairs (stable by lcm degree)
    std::vector<std::size_t> idx(new_pairs.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return new_pairs[a].lcm_deg < new_pairs[b].lcm_deg;
    });
    std::vector<CriticalPair> minimal;
    std::vector<Monomial> minimal_lcms;
    for (std::size_t k : idx) {
        bool dominated = false;
        for (const auto& ml : minimal_lcms) {
            if (mono_divides(ml, new_lcms[k])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            minimal.push_back(new_pairs[k]);
            minimal_lcms.push_back(new_lcms[k]);
        }
    }

    // product criterion
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        Monomial g = mono_gcd(G[minimal[k].i].lm(), lm_h);
        if (total_degree(g) != 0) pairs.push_back(minimal[k]);
    }

    G.push_back(std::move(h));
    sugar_vec.push_back(h_sugar);
}

EPoly s_poly(const EPoly& f, const EPoly& g, const MonomialOrder& ord, fp_t p) {
    Monomial L = mono_lcm(f.lm(), g.lm());
    Monomial mf = mono_div(L, f.lm());
    Monomial mg = mono_div(L, g.lm());
    EPoly a, b;
    fp_t inv_f = fp_inv(f.lc(), p), inv_g = fp_inv(g.lc(), p);
    a.t.reserve(f.t.size());
    for (const auto& t : f.t) a.t.push_back({mono_mul(t.m, mf), fp_mul(t.c, inv_f, p)});
    b.t.reserve(g.t.size());
    for (const auto& t : g.t) b.t.push_back({mono_mul(t.m, mg), fp_mul(t.c, inv_g, p)});
    return esub(a, b, ord, p);
}

void interreduce(std::vector<EPoly>& G, const MonomialOrder& ord, fp_t p) {
    // drop generators whose lead is divisible by another lead
    std::size_t i = 0;
    while (i < G.size()) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (j == i) continue;
            if (mono_divides(G[j].lm(), G[i].lm())) {
                redundant = true;
                break;
            }
        }
        if (redundant)
            G.erase(G.begin() + i);
        else
            ++i;
    }
    // tail-reduce each element against the rest until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            std::vector<EPoly> others;
            others.reserve(G.size() - 1);
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != k) others.push_back(G[j]);
            EPoly reduced = nf(G[k], others, ord, p);
            make_monic(reduced, p);
            if (!(reduced.t == G[k].t)) {
                G[k] = std::move(reduced);
                changed = true;
            }
        }
    }
    std::sort(G.begin(), G.end(), [&](const EPoly& a, const EPoly& b) {
        return ord.cmp(a.lm(), b.lm()) > 0;
    });
}

} // namespace

namespace {

// Monomial-ideal fast path: every generator a single term. The reduced GB is
// the minimal monomial generating set.
std::vector<Polynomial> monomial_reduced_gb(const RingPtr& ring,
                                            const std::vector<Polynomial>& gens,
                                            const MonomialOrder& order) {
    std::vector<Monomial> monos;
    monos.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.is_zero()) monos.push_back(g.terms()[0].m);
    }
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
        return order.cmp(a, b) < 0;
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::vector<Monomial> minimal;
    for (const auto& m : monos) { // ascending: dominators come later
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (mono_divides(kept, m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Monomial& a, const Monomial& b) {
        return order.cmp(a, b) > 0;
    });
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (auto& m : minimal) out.push_back(Polynomial::monomial(ring, m, 1));
    return out;
}

} // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, MonomialOrder order) {
    if (gens.empty()) return {};
    const RingPtr ring = gens.front().ring();
    const fp_t p = ring->p;

    bool all_monomial = true;
    bool any_nonzero = false;
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (g.is_zero()) continue;
        any_nonzero = true;
        if (g.term_count() != 1) all_monomial = false;
    }
    if (!any_nonzero) return {};
    if (all_monomial) return monomial_reduced_gb(ring, gens, order);

    std::vector<EPoly> seed;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        EPoly e = to_engine(g, order);
        make_monic(e, p);
        bool dup = false;
        for (const auto& kept : seed) {
            if (kept.t == e.t) {
                dup = true;
                break;
            }
        }
        if (!dup) seed.push_back(std::move(e));
    }

    std::vector<EPoly> G;
    std::vector<std::int64_t> sugar_vec;
    std::vector<CriticalPair> pairs;
    for (auto& e : seed) {
        std::int64_t e_sugar = e.deg();
        if (G.empty()) {
            G.push_back(std::move(e));
            sugar_vec.push_back(e_sugar);
        } else {
            update(G, pairs, std::move(e), sugar_vec, e_sugar, order);
        }
    }
    if (G.empty()) return {};

    std::int64_t budget = global_caps().pair_cap;
    auto pair_less = [](const CriticalPair& a, const CriticalPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    while (!pairs.empty()) {
        if (--budget < 0)
            raise(ErrorKind::PairCapExceeded, "Buchberger pair budget exhausted");
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        CriticalPair cp = *it;
        pairs.erase(it);

        EPoly h = s_poly(G[cp.i], G[cp.j], order, p);
        std::int64_t h_sugar = cp.sugar;
        h = nf(h, G, order, p, &sugar_vec, &h_sugar);
        if (!h.empty()) {
            make_monic(h, p);
            update(G, pairs, std::move(h), sugar_vec, h_sugar, order);
        }
    }

    interreduce(G, order, p);

    std::vector<Polynomial> out;
    out.reserve(G.size());
    for (const auto& e : G) out.push_back(from_engine(ring, e));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order) {
    if (f.is_zero() || basis.empty()) return f;
    const fp_t p = f.ring()->p;
    std::vector<EPoly> G;
    G.reserve(basis.size());
    for (const auto& b : basis) {
        if (!b.is_zero()) G.push_back(to_engine(b, order));
    }
    EPoly r = nf(to_engine(f, order), G, order, p);
    return from_engine(f.ring(), r);
}

// ---- Ideal ---------------------------------------------------------------

struct Ideal::Cache {
    std::once_flag flag;
    std::vector<Polynomial> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order)
    : ring_(std::move(ring)), order_(order), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring());
}

Ideal Ideal::zero(RingPtr ring, MonomialOrder order) {
    return Ideal(std::move(ring), {}, order);
}

Ideal Ideal::unit(RingPtr ring, MonomialOrder order) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)}, order);
}

const std::vector<Polynomial>& Ideal::reduced_gb() const {
    std::call_once(cache_->flag, [this]() { cache_->gb = buchberger(gens_, order_); });
    return cache_->gb;
}

bool Ideal::is_zero() const { return reduced_gb().empty(); }

bool Ideal::is_unit() const {
    const auto& gb = reduced_gb();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Polynomial Ideal::reduce(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    return normal_form(f, reduced_gb(), order_);
}

bool Ideal::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

std::string Ideal::key() const {
    std::string k;
    for (const auto& g : reduced_gb()) {
        k += g.str();
        k += ';';
    }
    return k;
}

namespace {
void require_compatible(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (!(a.order() == b.order()))
        raise(ErrorKind::OrderMismatch, "ideals use different monomial orders");
}
} // namespace

bool ideal_equal(const Ideal& a, const Ideal& b) {
    require_compatible(a, b);
    return a.reduced_gb() == b.reduced_gb();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    require_compatible(I, J);
    for (const auto& g : J.generators()) {
        if (!I.contains(g)) return false;
    }
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_compatible(a, b);
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_compatible(a, b);
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal ideal_scale(const Polynomial& f, const Ideal& a) {
    require_same_ring(f.ring(), a.ring());
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size());
    for (const auto& g : a.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens), a.order());
}

Ideal frobenius_power(const Ideal& J, std::int64_t q) {
    power_of_p_exponent(q, J.ring()->p);
    std::vector<Polynomial> gens;
    gens.reserve(J.generators().size());
    for (const auto& g : J.generators()) gens.push_back(g.frobenius(q));
    return Ideal(J.ring(), std::move(gens), J.order());
}

} // namespace fcart
