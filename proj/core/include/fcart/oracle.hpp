#ifndef FCART_ORACLE_HPP
#define FCART_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcart/cartier.hpp"
#include "fcart/invariants.hpp"
#include "fcart/padic.hpp"

namespace fcart {
namespace oracle {

// Independent computation paths used to cross-check the main engine. None of
// them touch the Groebner machinery.

// ---- univariate closed form -------------------------------------------------
// With monomial data in a single variable x and monomial twist x^w, the
// m-fold image is C^m((x^n)) = (x^{floor((n + w_m)/q^m)}) with the
// accumulated shift w_m = w(q^m-1)/(q-1).
struct UnivariateCase {
    std::int64_t q = 0;      // p^e
    std::int64_t twist_exp = 0;
    std::int64_t module_exp = 0; // N = (x^k)
    std::int64_t f_exp = 1;      // f = x^d, d >= 1
};

std::int64_t univariate_image_exp(const UnivariateCase& c, int m, std::int64_t n);
std::vector<std::int64_t> univariate_nu_members(const UnivariateCase& c, int m);
std::int64_t univariate_test_ideal_exp(const UnivariateCase& c, std::int64_t t_num,
                                       std::int64_t t_den);

// ---- monomial-ideal path ------------------------------------------------------
// Monomial ideals as minimal generator antichains; Cartier images via
// per-monomial digit arithmetic; equality by generator-set comparison.
struct MonomialIdeal {
    std::vector<std::vector<std::int64_t>> gens; // minimal, sorted

    bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
};

MonomialIdeal make_monomial_ideal(std::vector<std::vector<std::int64_t>> gens);
MonomialIdeal monomial_scale(const MonomialIdeal& I, const std::vector<std::int64_t>& m);
// C_S(I) with monomial twist exponent W and modulus q
MonomialIdeal monomial_cartier_image(const MonomialIdeal& I,
                                     const std::vector<std::int64_t>& W, std::int64_t q);
MonomialIdeal monomial_cartier_power(const MonomialIdeal& I,
                                     const std::vector<std::int64_t>& W, std::int64_t q,
                                     int m);
bool monomial_ideal_member(const MonomialIdeal& I, const std::vector<std::int64_t>& mono);
// converts through the main engine for comparisons
Ideal to_engine_ideal(const RingPtr& ring, const MonomialIdeal& I, MonomialOrder order);

// ---- exact integer binomial ----------------------------------------------------
// binom(a, n) mod p by exact big-integer arithmetic (no Lucas shortcut)
fp_t bignum_binomial_mod(std::int64_t a, std::int64_t n, fp_t p);

// ---- dense root extraction -----------------------------------------------------
// root_decompose recomputed over a dense coefficient array
RootDecomposition dense_root_decompose(const Polynomial& f, std::int64_t q);

// ---- brute-force minimal-K search ----------------------------------------------
// smallest monomial ideal K with J ⊆ K^[q], searched over generator subsets
// of bounded degree; used against cartier_image with trivial twist
std::optional<MonomialIdeal> minimal_bracket_root(const MonomialIdeal& J, std::int64_t q,
                                                  std::size_t nvars,
                                                  std::int64_t max_gen_deg);

// ---- comparison reports ---------------------------------------------------------
enum class OracleKind {
    univariate_closed_form,
    dense_root_extraction,
    monomial_ideal_path,
    integer_binomial,
};

const char* oracle_kind_name(OracleKind k);

struct OracleReport {
    std::string task;
    std::string main_result;
    std::string oracle_result;
    bool agree = false;
    OracleKind kind = OracleKind::univariate_closed_form;
};

// Jobs the oracle knows how to shadow; UnsupportedRegime otherwise.
struct OracleJob {
    std::string command; // nu | testideal | lucas | rootdec
    fp_t p = 2;
    int e = 1;
    int level = 1;
    std::string f_text;
    std::string twist_text = "1";
    std::vector<std::string> module_texts; // default {"1"}
    std::string t_text;                    // testideal
    std::string alpha_text;                // lucas
    std::int64_t n = 0;                    // lucas
    std::vector<std::string> vars = {"x", "y", "z"};
};

OracleReport oracle_compare(const OracleJob& job);

} // namespace oracle
} // namespace fcart

#endif
