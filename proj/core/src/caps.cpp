#include "fcart/caps.hpp"

#include <cstdlib>
#include <string>

#include "fcart/error.hpp"

namespace fcart {

namespace {

Caps caps_from_env() {
    Caps c;
    if (const char* v = std::getenv("FCART_EXP_CAP")) c.exp_cap = std::atoll(v);
    if (const char* v = std::getenv("FCART_ITER_CAP")) c.iter_cap = std::atoi(v);
    if (c.exp_cap < 2) c.exp_cap = 2;
    if (c.iter_cap < 1) c.iter_cap = 1;
    return c;
}

} // namespace

Caps& global_caps() {
    static Caps caps = caps_from_env();
    return caps;
}

void check_exp_cap(std::int64_t qm) {
    if (qm > global_caps().exp_cap)
        raise(ErrorKind::ExponentCapExceeded,
              "q^m = " + std::to_string(qm) + " exceeds the exponent cap " +
                  std::to_string(global_caps().exp_cap));
}

} // namespace fcart
