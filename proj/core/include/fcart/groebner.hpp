#ifndef FCART_GROEBNER_HPP
#define FCART_GROEBNER_HPP

#include <memory>
#include <string>
#include <vector>

#include "fcart/polynomial.hpp"

namespace fcart {

// Buchberger with Gebauer-Moller pair elimination and sugar selection,
// followed by full interreduction. Output is the unique reduced Groebner
// basis, monic, sorted by leading monomial descending. Deterministic for a
// fixed order.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, MonomialOrder order);

// full normal form of f against G (every term reduced)
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order);

// Finitely generated ideal, canonicalized by its reduced Groebner basis.
// Values are immutable; the GB cache fills once under a synchronization
// guard and is shared across copies.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens,
          MonomialOrder order = MonomialOrder{});

    static Ideal zero(RingPtr ring, MonomialOrder order = MonomialOrder{});
    static Ideal unit(RingPtr ring, MonomialOrder order = MonomialOrder{});

    const RingPtr& ring() const { return ring_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& reduced_gb() const;

    bool is_zero() const;
    bool is_unit() const;

    Polynomial reduce(const Polynomial& f) const; // normal form against the GB
    bool contains(const Polynomial& f) const;

    // serialized reduced GB; canonical key for hashing and reports
    std::string key() const;

private:
    RingPtr ring_;
    MonomialOrder order_{};
    std::vector<Polynomial> gens_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
// J subset of I
bool ideal_contains(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_scale(const Polynomial& f, const Ideal& a); // f * a

// bracket power J^[q]: ideal generated by g^q over generators g; independent
// of the chosen generating set
Ideal frobenius_power(const Ideal& J, std::int64_t q);

// groebner_reduce: canonicalize a generator list
inline Ideal groebner_reduce(RingPtr ring, std::vector<Polynomial> gens,
                             MonomialOrder order = MonomialOrder{}) {
    Ideal I(std::move(ring), std::move(gens), order);
    (void)I.reduced_gb();
    return I;
}

} // namespace fcart

#endif
