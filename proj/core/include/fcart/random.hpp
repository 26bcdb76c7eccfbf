#ifndef FCART_RANDOM_HPP
#define FCART_RANDOM_HPP

#include <cstdint>
#include <random>

#include "fcart/polynomial.hpp"

namespace fcart {

// Deterministic corpus generator; every suite seeds its own engine so runs
// are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) { // inclusive
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    // random nonzero polynomial with total degree <= max_deg and at most
    // max_terms terms
    Polynomial polynomial(const RingPtr& ring, int max_deg, int max_terms);

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace fcart

#endif
