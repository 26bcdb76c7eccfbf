#ifndef FCART_CARTIER_HPP
#define FCART_CARTIER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fcart/groebner.hpp"

namespace fcart {

// Twisted q-Cartier structure on R: C_S(x) = C_std(g * x) with q = p^e, where
// C_std is the e-iterated Cartier operator dual to the monomial (q-1,...,q-1).
// The m-fold iterate satisfies C_S^m(J) = C_std^m(g^{(q^m-1)/(q-1)} J).
struct CartierStructure {
    int e = 1;
    Polynomial twist;
    RingPtr ring;

    std::int64_t q() const; // p^e, cap-checked
};

CartierStructure make_cartier(RingPtr ring, int e, Polynomial twist);
CartierStructure standard_cartier(RingPtr ring, int e = 1);

// C_S(J): ideal generated by the q-th-root coefficients of g * (each
// generator of J). Computed from the reduced GB of J by default.
Ideal cartier_image(const CartierStructure& S, const Ideal& J);

// same operator on an explicit generator list (generator-independence tests)
Ideal cartier_image_of_gens(const CartierStructure& S, const RingPtr& ring,
                            const std::vector<Polynomial>& gens,
                            MonomialOrder order);

enum class PowerPath { one_shot, iterate };

// C_S^m(J); one_shot extracts q^m-th roots of g^{(q^m-1)/(q-1)} * J in a
// single pass, iterate composes cartier_image m times. Both are equal (a
// tested invariant).
Ideal cartier_power_image(const CartierStructure& S, const Ideal& J, int m,
                          PowerPath path = PowerPath::one_shot);

bool is_f_pure(const CartierStructure& S, const Ideal& M);

struct StabilizationRecord {
    Ideal stable_ideal;
    int stable_level = 0;           // first m >= 1 with C^m = C^{m+1}
    std::vector<Ideal> chain;       // monotone chain of intermediate ideals
    int containment_exponent = 0;   // k with f^k M inside the result (M_{f!} only)
};

// underline(M): stable value of M >= C(M) >= C^2(M) >= ...; requires
// C_S(M) subset of M (NotCartierSubmodule otherwise). The result is F-pure.
StabilizationRecord stabilized_image(const CartierStructure& S, const Ideal& M);

// M_{f!}: stable value of the ascending chain C(fM) <= C^2(fM) <= ...;
// requires M F-pure (NotFPure) and f != 0 (ZeroDivisorInput). The result is
// F-pure and contains f*M.
StabilizationRecord zero_extension(const CartierStructure& S, const Ideal& M,
                                   const Polynomial& f);

// first (i, j) with C^i(N) = C^{i+j}(N), scanning i+j <= max_iter
std::optional<std::pair<int, int>> preperiodicity_detect(const CartierStructure& S,
                                                         const Ideal& N, int max_iter);

} // namespace fcart

#endif
