#include "fcart/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "fcart/error.hpp"

namespace fcart {

namespace {
const MonomialOrder kCanonical{OrderKind::grevlex};
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const fp_t p = ring_->p;
    for (auto& t : terms_) t.c = fp_t(t.c % p);
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kCanonical.cmp(a.m, b.m) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = fp_add(out.back().c, t.c, p);
        } else {
            out.push_back(std::move(t));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.c == 0; }),
              out.end());
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
    fp_t c = fp_reduce(value, ring->p);
    Polynomial r(ring);
    if (c != 0) r.terms_.push_back({Monomial(ring->nvars), c});
    return r;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index, std::int64_t exp) {
    if (index >= ring->nvars) raise(ErrorKind::IndexOutOfRange, "variable index out of range");
    if (exp < 0) raise(ErrorKind::NegativeExponent, "negative exponent");
    Polynomial r(ring);
    if (exp == 0) return constant(ring, 1);
    Monomial m(ring->nvars);
    m.e[index] = exp;
    r.terms_.push_back({std::move(m), 1});
    return r;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, fp_t c) {
    Polynomial r(std::move(ring));
    c = fp_t(c % r.ring_->p);
    if (c != 0) r.terms_.push_back({std::move(m), c});
    return r;
}

std::int64_t Polynomial::degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.m));
    return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const fp_t p = ring_->p;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kCanonical.cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            fp_t s = fp_add(terms_[i].c, o.terms_[j].c, p);
            if (s != 0) out.push_back({terms_[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = fp_neg(t.c, ring_->p);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(fp_t c) const {
    const fp_t p = ring_->p;
    c = fp_t(c % p);
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = fp_mul(t.c, c, p);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, fp_t c) const {
    const fp_t p = ring_->p;
    c = fp_t(c % p);
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({mono_mul(t.m, m), fp_mul(t.c, c, p)});
    return r; // order preserved under monomial translation
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const fp_t p = ring_->p;
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc.push_back({mono_mul(a.m, b.m), fp_mul(a.c, b.c, p)});
    return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::frobenius(std::int64_t q) const {
    if (q == 1) return *this;
    power_of_p_exponent(q, ring_->p);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // coefficients lie in F_p, fixed by every power of Frobenius
    for (const auto& t : terms_) r.terms_.push_back({mono_pow_scale(t.m, q), t.c});
    return r;
}

namespace {
Polynomial pow_binary(const Polynomial& f, std::int64_t n) {
    Polynomial r = Polynomial::constant(f.ring(), 1);
    Polynomial b = f;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return r;
}
} // namespace

Polynomial Polynomial::pow(std::int64_t k) const {
    if (k < 0) raise(ErrorKind::NegativeExponent, "negative polynomial power");
    Polynomial result = Polynomial::constant(ring_, 1);
    if (k == 0) return result;
    const std::int64_t p = ring_->p;
    // f^k = prod_i (f^{p^i})^{k_i} over the base-p digits of k
    Polynomial base = *this;
    std::int64_t rem = k;
    while (rem > 0) {
        std::int64_t digit = rem % p;
        if (digit > 0) result = result * pow_binary(base, digit);
        rem /= p;
        if (rem > 0) base = base.frobenius(p);
    }
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // '*' can be dropped only when variable names are single characters
    bool compact = true;
    for (const auto& name : ring_->var_names)
        if (name.size() != 1) compact = false;
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += "+";
        first = false;
        bool constant_term = t.m.is_one();
        bool wrote = false;
        if (t.c != 1 || constant_term) {
            out += std::to_string(t.c);
            wrote = true;
        }
        for (std::size_t i = 0; i < t.m.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (wrote && !compact) out += "*";
            out += ring_->var_names[i];
            if (t.m.e[i] > 1) out += "^" + std::to_string(t.m.e[i]);
            wrote = true;
        }
    }
    return out;
}

int power_of_p_exponent(std::int64_t q, fp_t p) {
    if (q < 2) raise(ErrorKind::InvalidQ, "q must be >= 2");
    int e = 0;
    std::int64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1 || e < 1)
        raise(ErrorKind::InvalidQ,
              std::to_string(q) + " is not a power of p=" + std::to_string(p));
    return e;
}

RootDecomposition root_decompose(const Polynomial& f, std::int64_t q) {
    power_of_p_exponent(q, f.ring()->p);
    RootDecomposition dec;
    dec.q = q;
    const auto& ring = f.ring();
    std::map<std::vector<std::int64_t>, std::vector<Term>> buckets;
    for (const auto& t : f.terms()) {
        std::vector<std::int64_t> residue(ring->nvars);
        Monomial quot(ring->nvars);
        for (std::size_t i = 0; i < ring->nvars; ++i) {
            residue[i] = t.m.e[i] % q;
            quot.e[i] = t.m.e[i] / q;
        }
        // F_p coefficients are their own q-th roots
        buckets[residue].push_back({std::move(quot), t.c});
    }
    for (auto& [residue, terms] : buckets) {
        Polynomial h(ring, std::move(terms));
        if (!h.is_zero()) dec.parts.emplace(residue, std::move(h));
    }
    return dec;
}

Polynomial root_reassemble(const RootDecomposition& dec, const RingPtr& ring) {
    Polynomial sum(ring);
    for (const auto& [residue, h] : dec.parts) {
        Polynomial part = h.frobenius(dec.q).times_monomial(Monomial(residue), 1);
        sum = sum + part;
    }
    return sum;
}

} // namespace fcart
