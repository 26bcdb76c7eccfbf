#ifndef FCART_POLYNOMIAL_HPP
#define FCART_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fcart/fp.hpp"
#include "fcart/monomial.hpp"
#include "fcart/ring.hpp"

namespace fcart {

struct Term {
    Monomial m;
    fp_t c = 0;

    bool operator==(const Term& o) const { return c == o.c && m == o.m; }
};

// Sparse exact polynomial over F_p. Terms are kept sorted grevlex-descending
// (the canonical storage order) with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms); // normalizes

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, std::int64_t value);
    static Polynomial variable(const RingPtr& ring, std::size_t index, std::int64_t exp = 1);
    static Polynomial monomial(RingPtr ring, Monomial m, fp_t c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t degree() const; // -1 for the zero polynomial

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(fp_t c) const;
    Polynomial times_monomial(const Monomial& m, fp_t c) const;

    // f^k; uses the base-p digits of k so Frobenius powers stay cheap
    Polynomial pow(std::int64_t k) const;

    // f^{p^e}: coefficients are fixed by Frobenius, exponents scale by p^e
    Polynomial frobenius(std::int64_t q) const;

    // canonical text form: terms grevlex-descending, coefficients in [0,p)
    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

// The q-th root decomposition f = sum_a (h_a)^q x^a over residues a in
// [0,q)^nvars; only nonzero h_a are returned. q must be a power of ring.p.
struct RootDecomposition {
    std::int64_t q = 0;
    std::map<std::vector<std::int64_t>, Polynomial> parts;
};

RootDecomposition root_decompose(const Polynomial& f, std::int64_t q);

// reassembles sum (h_a)^q x^a; used by the round-trip property
Polynomial root_reassemble(const RootDecomposition& dec, const RingPtr& ring);

// checks q = p^e with e >= 1, returns e; throws InvalidQ otherwise
int power_of_p_exponent(std::int64_t q, fp_t p);

} // namespace fcart

#endif
