#ifndef FCART_CAPS_HPP
#define FCART_CAPS_HPP

#include <cstdint>

namespace fcart {

// Resource budgets. Exceeding one raises ExponentCapExceeded /
// IterationCapExceeded / PairCapExceeded rather than thrashing.
struct Caps {
    std::int64_t exp_cap = std::int64_t(1) << 20; // bound on q^m
    int iter_cap = 64;                            // stabilization iterations
    std::int64_t pair_cap = 500000;               // Buchberger pair budget
};

// Process-wide budgets; seeded from FCART_EXP_CAP / FCART_ITER_CAP on first
// use, then adjustable by the CLI.
Caps& global_caps();

void check_exp_cap(std::int64_t qm);

} // namespace fcart

#endif
