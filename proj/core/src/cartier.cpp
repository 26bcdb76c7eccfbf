#include "fcart/cartier.hpp"

#include <unordered_map>

#include "fcart/caps.hpp"
#include "fcart/error.hpp"

namespace fcart {

std::int64_t CartierStructure::q() const {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
        v *= ring->p;
        check_exp_cap(v);
    }
    return v;
}

CartierStructure make_cartier(RingPtr ring, int e, Polynomial twist) {
    if (e < 1) raise(ErrorKind::InvalidArgument, "Cartier level e must be >= 1");
    if (twist.is_zero()) raise(ErrorKind::ZeroDivisorInput, "twist must be nonzero");
    require_same_ring(ring, twist.ring());
    CartierStructure S{e, std::move(twist), std::move(ring)};
    (void)S.q();
    return S;
}

CartierStructure standard_cartier(RingPtr ring, int e) {
    auto one = Polynomial::constant(ring, 1);
    return make_cartier(std::move(ring), e, std::move(one));
}

namespace {

// root coefficients of tw * g for each g, with modulus Q
std::vector<Polynomial> root_coefficients(const Polynomial& tw,
                                          const std::vector<Polynomial>& gens,
                                          std::int64_t Q) {
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        Polynomial h = tw * g;
        if (h.is_zero()) continue;
        RootDecomposition dec = root_decompose(h, Q);
        for (auto& [residue, part] : dec.parts) out.push_back(part);
    }
    return out;
}

Ideal image_with_modulus(const RingPtr& ring, const Polynomial& tw,
                         const std::vector<Polynomial>& gens, std::int64_t Q,
                         MonomialOrder order) {
    return Ideal(ring, root_coefficients(tw, gens, Q), order);
}

} // namespace

Ideal cartier_image_of_gens(const CartierStructure& S, const RingPtr& ring,
                            const std::vector<Polynomial>& gens, MonomialOrder order) {
    require_same_ring(S.ring, ring);
    return image_with_modulus(ring, S.twist, gens, S.q(), order);
}

Ideal cartier_image(const CartierStructure& S, const Ideal& J) {
    require_same_ring(S.ring, J.ring());
    return image_with_modulus(J.ring(), S.twist, J.reduced_gb(), S.q(), J.order());
}

Ideal cartier_power_image(const CartierStructure& S, const Ideal& J, int m,
                          PowerPath path) {
    if (m < 1) raise(ErrorKind::InvalidArgument, "iteration count m must be >= 1");
    require_same_ring(S.ring, J.ring());
    if (path == PowerPath::iterate) {
        Ideal cur = J;
        for (int i = 0; i < m; ++i) cur = cartier_image(S, cur);
        return cur;
    }
    const std::int64_t q = S.q();
    std::int64_t Q = 1;
    for (int i = 0; i < m; ++i) {
        Q *= q;
        check_exp_cap(Q);
    }
    // accumulated twist g^{1 + q + ... + q^{m-1}}
    std::int64_t w = (Q - 1) / (q - 1);
    Polynomial tw = S.twist.is_constant() && S.twist == Polynomial::constant(S.ring, 1)
                        ? S.twist
                        : S.twist.pow(w);
    return image_with_modulus(J.ring(), tw, J.reduced_gb(), Q, J.order());
}

bool is_f_pure(const CartierStructure& S, const Ideal& M) {
    return ideal_equal(cartier_image(S, M), M);
}

StabilizationRecord stabilized_image(const CartierStructure& S, const Ideal& M) {
    Ideal img = cartier_image(S, M);
    if (!ideal_contains(M, img))
        raise(ErrorKind::NotCartierSubmodule, "C(M) is not contained in M");
    StabilizationRecord rec;
    rec.chain.push_back(M);
    rec.chain.push_back(img);
    Ideal prev = img;
    const int cap = global_caps().iter_cap;
    for (int m = 1; m <= cap; ++m) {
        Ideal next = cartier_image(S, prev);
        rec.chain.push_back(next);
        if (ideal_equal(next, prev)) {
            rec.stable_ideal = prev;
            rec.stable_level = m;
            // stability means F-purity of the stable value
            if (!ideal_equal(cartier_image(S, rec.stable_ideal), rec.stable_ideal))
                raise(ErrorKind::InternalMismatch, "stable image is not F-pure");
            return rec;
        }
        prev = next;
    }
    raise(ErrorKind::IterationCapExceeded, "descending chain did not stabilize");
}

StabilizationRecord zero_extension(const CartierStructure& S, const Ideal& M,
                                   const Polynomial& f) {
    if (f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "f must be nonzero");
    require_same_ring(S.ring, f.ring());
    if (!is_f_pure(S, M)) raise(ErrorKind::NotFPure, "M is not F-pure under S");

    StabilizationRecord rec;
    Ideal fM = ideal_scale(f, M);
    Ideal prev = cartier_image(S, fM);
    rec.chain.push_back(prev);
    const int cap = global_caps().iter_cap;
    for (int m = 1; m <= cap; ++m) {
        Ideal next = cartier_image(S, prev);
        rec.chain.push_back(next);
        // ascent C^m(fM) <= C^{m+1}(fM) is guaranteed by F-purity
        if (!ideal_contains(next, prev))
            raise(ErrorKind::InternalMismatch, "M_{f!} chain failed to ascend");
        if (ideal_equal(next, prev)) {
            rec.stable_ideal = prev;
            rec.stable_level = m;
            rec.containment_exponent = 1;
            if (!ideal_contains(rec.stable_ideal, fM))
                raise(ErrorKind::InternalMismatch, "f*M not contained in M_{f!}");
            return rec;
        }
        prev = next;
    }
    raise(ErrorKind::IterationCapExceeded, "M_{f!} chain did not stabilize");
}

std::optional<std::pair<int, int>> preperiodicity_detect(const CartierStructure& S,
                                                         const Ideal& N, int max_iter) {
    if (max_iter < 1) raise(ErrorKind::InvalidArgument, "max_iter must be >= 1");
    std::unordered_map<std::string, int> seen;
    Ideal cur = N;
    seen.emplace(cur.key(), 0);
    for (int k = 1; k <= max_iter; ++k) {
        cur = cartier_image(S, cur);
        auto [it, inserted] = seen.emplace(cur.key(), k);
        if (!inserted) {
            int i = it->second;
            return std::make_pair(i, k - i);
        }
    }
    return std::nullopt;
}

} // namespace fcart
