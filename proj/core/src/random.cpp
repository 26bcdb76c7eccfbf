#include "fcart/random.hpp"

namespace fcart {

Polynomial Rng::polynomial(const RingPtr& ring, int max_deg, int max_terms) {
    while (true) {
        std::vector<Term> terms;
        int nterms = int(uniform(1, max_terms));
        for (int t = 0; t < nterms; ++t) {
            Monomial m(ring->nvars);
            std::int64_t budget = max_deg;
            for (std::size_t i = 0; i < ring->nvars; ++i) {
                std::int64_t e = uniform(0, budget);
                m.e[i] = e;
                budget -= e;
            }
            fp_t c = fp_t(uniform(1, ring->p - 1));
            terms.push_back({std::move(m), c});
        }
        Polynomial f(ring, std::move(terms));
        if (!f.is_zero()) return f;
    }
}

} // namespace fcart
