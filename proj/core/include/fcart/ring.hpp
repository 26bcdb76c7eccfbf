#ifndef FCART_RING_HPP
#define FCART_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fcart/fp.hpp"

namespace fcart {

// The ambient polynomial ring F_p[x_1..x_n]. Immutable after construction;
// shared by every value built over it.
struct RingConfig {
    fp_t p = 0;
    std::size_t nvars = 0;
    std::vector<std::string> var_names;

    bool operator==(const RingConfig& o) const {
        return p == o.p && nvars == o.nvars && var_names == o.var_names;
    }
};

using RingPtr = std::shared_ptr<const RingConfig>;

// Validates: p prime, p < 2^31, nvars >= 1, names nonempty identifiers,
// pairwise distinct.
RingPtr make_ring(std::uint64_t p, std::vector<std::string> var_names);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b);

} // namespace fcart

#endif
