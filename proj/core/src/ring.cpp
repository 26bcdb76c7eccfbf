#include "fcart/ring.hpp"

#include <set>

#include "fcart/error.hpp"

namespace fcart {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto head = s[0];
    if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_')) return false;
    for (char ch : s) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

} // namespace

RingPtr make_ring(std::uint64_t p, std::vector<std::string> var_names) {
    if (p >= (std::uint64_t(1) << 31))
        raise(ErrorKind::NotPrime, "characteristic must be < 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (var_names.empty())
        raise(ErrorKind::InvalidArgument, "ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& name : var_names) {
        if (!is_identifier(name))
            raise(ErrorKind::InvalidArgument, "bad variable name '" + name + "'");
        if (!seen.insert(name).second)
            raise(ErrorKind::InvalidArgument, "duplicate variable name '" + name + "'");
    }
    auto ring = std::make_shared<RingConfig>();
    ring->p = fp_t(p);
    ring->nvars = var_names.size();
    ring->var_names = std::move(var_names);
    return ring;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) raise(ErrorKind::RingMismatch, "values live in different rings");
}

} // namespace fcart
