#ifndef FCART_INVARIANTS_HPP
#define FCART_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fcart/cartier.hpp"
#include "fcart/padic.hpp"

namespace fcart {

// exact nonnegative rational n/d in lowest terms; d > 0
struct Rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rat64& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

Rat64 make_rat(std::int64_t num, std::int64_t den);
int rat_cmp(const Rat64& a, const Rat64& b);

// ---- nu-invariants ---------------------------------------------------------

struct NuLevelSet {
    int level = 0;
    std::int64_t qm = 0;
    std::vector<std::int64_t> members; // sorted, within [0, q^m)
};

// jumps n in [0, n_hi) with C^m(f^n N) != C^m(f^{n+1} N); the scan is
// incremental in n (one scale by f per step)
std::vector<std::int64_t> nu_jump_scan(const CartierStructure& S, const Ideal& N,
                                       const Polynomial& f, int m, std::int64_t n_hi);

NuLevelSet nu_set(const CartierStructure& S, const Ideal& N, const Polynomial& f, int m);

struct NuBranch {
    std::vector<std::int64_t> members; // member at level 1..k
    std::vector<std::int64_t> digits;  // base-q digits of the tower
    bool dead = false;                 // stopped before max_level with no extension
};

struct NuTree {
    int max_level = 0;
    std::int64_t q = 0;
    std::vector<NuLevelSet> levels;
    std::vector<NuBranch> branches;
};

NuTree nu_tree(const CartierStructure& S, const Ideal& N, const Polynomial& f,
               int max_level);

// ---- Bernstein-Sato roots ---------------------------------------------------

enum class CertStatus { certified_rational, uncertified_prefix };

struct BsrCertificate {
    std::vector<std::int64_t> digit_prefix;
    CertStatus status = CertStatus::uncertified_prefix;
    std::optional<PadicRational> value; // set iff certified
    int period = 0;
    int preperiod_level = 0; // first level of the pure period
    int verified_levels = 0;
    bool dead_end = false;
    int max_level = 0;
};

// Certification: the digit pattern is purely periodic from some level (the
// canonical minimal-preperiod parse), at least two full periods are observed,
// and digits(value, m) lies in nu(q^m) for every computed level m. When N is
// F-pure, candidate values outside [-1, 0] are refuted outright.
std::vector<BsrCertificate> bsr_roots(const CartierStructure& S, const Ideal& N,
                                      const Polynomial& f, int max_level);
std::vector<BsrCertificate> bsr_roots(const NuTree& tree);
std::vector<BsrCertificate> bsr_roots(const NuTree& tree, bool f_pure_window);

// certified values only, ordered by digit prefix
std::vector<PadicRational> certified_values(const std::vector<BsrCertificate>& certs);

// ---- D-module side cross-check ---------------------------------------------

struct DsideReport {
    int level = 0;
    bool agree = false;
    std::vector<std::int64_t> nu_members;
    std::vector<std::int64_t> dside_members;
};

// dside members: n with (C^m(f^n N))^[q^m] != (C^m(f^{n+1} N))^[q^m],
// realizing D_X^{(em)} f^n N through bracket powers
DsideReport dside_bsr_check(const CartierStructure& S, const Ideal& N,
                            const Polynomial& f, int m);

// ---- test ideals -------------------------------------------------------------

struct TestIdealRecord {
    Rat64 t;
    Ideal ideal;
    int witness_level = 0;
};

// tau(M, f^t) for t = n/q^m >= 0 (denominator a power of p); M must be F-pure
TestIdealRecord test_ideal(const CartierStructure& S, const Ideal& M,
                           const Polynomial& f, const Rat64& t);

// ---- F-jumping exponents ------------------------------------------------------

enum class FjnSide { left, right, both };

struct FjnExponent {
    Rat64 t;
    FjnSide side = FjnSide::left;
    bool certified = false;
    int period = 0; // digit period of the certified left value
};

struct FjnInterval {
    Rat64 lo, hi; // an exponent lies in (lo, hi]; not resolved to a point
    bool unresolved_right = false;
};

struct FjnReport {
    int level = 0;
    std::vector<FjnExponent> exponents;
    std::vector<FjnInterval> unresolved;
};

// Grid scan of tau at t = n/q^level for every refinement level up to `level`,
// interval-chain certification of left exponents, stabilized right-limits for
// right exponents. Reports exponents in (0, 1] plus a right jump at 0 if any.
FjnReport fjn_exponents(const CartierStructure& S, const Ideal& M,
                        const Polynomial& f, int level);

// ---- zero root / crosscheck / probe ------------------------------------------

// true iff M_{f!} != M, equivalently 0 in FJN^+ iff 0 is a BSR root
bool zero_root_test(const CartierStructure& S, const Ideal& M, const Polynomial& f);

struct CrosscheckReport {
    bool agree = false;
    bool zero_root = false;
    std::vector<PadicRational> bsr_values;        // certified, in [-1, 0]
    std::vector<Rat64> fjn_left;                  // certified, in (0, 1]
    std::vector<Rat64> fjn_right;                 // certified right jumps
    std::vector<std::string> mismatches;
};

// certified BSR ∩ [-1,0) must equal -(certified left exponents in (0,1] with
// p-free denominator); 0 in BSR must match a right jump at 0 and M_{f!} != M
CrosscheckReport bsr_fjn_crosscheck(const CartierStructure& S, const Ideal& M,
                                    const Polynomial& f, int max_level);

struct ProbeReport {
    int max_level = 0;
    std::vector<std::int64_t> counts; // #(nu(q^m) ∩ [0,q^m)) for m = 1..max_level
    std::int64_t max = 0;
    bool level_stable = false; // last two counts equal
};

ProbeReport bound_assumption_probe(const CartierStructure& S, const Ideal& N,
                                   const Polynomial& f, int max_level);

// psi maps from the FJN side to nu members
inline std::int64_t psi_minus(const Rat64& t, std::int64_t qm) {
    // ceil(t*qm) - 1
    std::int64_t v = (t.num * qm + t.den - 1) / t.den;
    return v - 1;
}
inline std::int64_t psi_plus(const Rat64& t, std::int64_t qm) {
    return (t.num * qm) / t.den;
}

} // namespace fcart

#endif
