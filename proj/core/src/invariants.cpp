#include "fcart/invariants.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <set>

#include "fcart/caps.hpp"
#include "fcart/error.hpp"
#include "fcart/parallel.hpp"

namespace fcart {

using boost::multiprecision::cpp_int;

// ---- Rat64 -----------------------------------------------------------------

Rat64 make_rat(std::int64_t num, std::int64_t den) {
    if (den == 0) raise(ErrorKind::InvalidArgument, "zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat64{num, den};
}

int rat_cmp(const Rat64& a, const Rat64& b) {
    cpp_int lhs = cpp_int(a.num) * b.den;
    cpp_int rhs = cpp_int(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::string Rat64::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ---- nu scan ---------------------------------------------------------------

namespace {

std::int64_t pow_checked(std::int64_t q, int m) {
    std::int64_t v = 1;
    for (int i = 0; i < m; ++i) {
        v *= q;
        check_exp_cap(v);
    }
    return v;
}

struct ScanImages {
    std::vector<Ideal> images; // images[n] = C^m(f^n N), n = 0..n_hi
};

// C^m(f^n N) for n = 0..n_hi via one q^m-root extraction per generator; the
// f^n N generators advance by a single scale-by-f per step.
ScanImages scan_images(const CartierStructure& S, const Ideal& N, const Polynomial& f,
                       int m, std::int64_t n_hi) {
    if (f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "f must be nonzero");
    require_same_ring(S.ring, N.ring());
    require_same_ring(S.ring, f.ring());
    const std::int64_t q = S.q();
    const std::int64_t Q = pow_checked(q, m);
    const std::int64_t w = (Q - 1) / (q - 1);
    const Polynomial tw = S.twist.pow(w);
    const MonomialOrder order = N.order();

    std::vector<std::vector<Polynomial>> gens_by_n;
    gens_by_n.reserve(std::size_t(n_hi) + 1);
    gens_by_n.push_back(N.reduced_gb());
    for (std::int64_t n = 1; n <= n_hi; ++n) {
        std::vector<Polynomial> next;
        next.reserve(gens_by_n.back().size());
        for (const auto& g : gens_by_n.back()) next.push_back(f * g);
        gens_by_n.push_back(std::move(next));
    }

    ScanImages out;
    out.images = parallel_map<Ideal>(std::size_t(n_hi) + 1, [&](std::size_t n) {
        std::vector<Polynomial> coeffs;
        for (const auto& g : gens_by_n[n]) {
            Polynomial h = tw * g;
            if (h.is_zero()) continue;
            RootDecomposition dec = root_decompose(h, Q);
            for (auto& [residue, part] : dec.parts) coeffs.push_back(part);
        }
        Ideal img(N.ring(), std::move(coeffs), order);
        (void)img.reduced_gb();
        return img;
    });
    return out;
}

} // namespace

std::vector<std::int64_t> nu_jump_scan(const CartierStructure& S, const Ideal& N,
                                       const Polynomial& f, int m, std::int64_t n_hi) {
    ScanImages scan = scan_images(S, N, f, m, n_hi);
    std::vector<std::int64_t> jumps;
    for (std::int64_t n = 0; n < n_hi; ++n) {
        if (!ideal_equal(scan.images[std::size_t(n)], scan.images[std::size_t(n) + 1]))
            jumps.push_back(n);
    }
    return jumps;
}

NuLevelSet nu_set(const CartierStructure& S, const Ideal& N, const Polynomial& f, int m) {
    if (m < 1) raise(ErrorKind::InvalidArgument, "level m must be >= 1");
    NuLevelSet set;
    set.level = m;
    set.qm = pow_checked(S.q(), m);
    set.members = nu_jump_scan(S, N, f, m, set.qm);
    return set;
}

NuTree nu_tree(const CartierStructure& S, const Ideal& N, const Polynomial& f,
               int max_level) {
    if (max_level < 1) raise(ErrorKind::InvalidArgument, "max_level must be >= 1");
    NuTree tree;
    tree.max_level = max_level;
    tree.q = S.q();
    for (int m = 1; m <= max_level; ++m) tree.levels.push_back(nu_set(S, N, f, m));

    // nesting (downward compatibility): each member's truncation must appear
    // one level below
    for (int m = 1; m < max_level; ++m) {
        const auto& lower = tree.levels[std::size_t(m) - 1];
        const auto& upper = tree.levels[std::size_t(m)];
        for (std::int64_t n : upper.members) {
            std::int64_t trunc = n % lower.qm;
            if (!std::binary_search(lower.members.begin(), lower.members.end(), trunc))
                raise(ErrorKind::InternalMismatch,
                      "nu nesting violated at level " + std::to_string(m + 1));
        }
    }

    // maximal root-to-leaf digit paths
    struct Frame {
        std::vector<std::int64_t> members;
    };
    std::vector<Frame> stack;
    for (std::int64_t n1 : tree.levels[0].members) stack.push_back({{n1}});
    while (!stack.empty()) {
        Frame cur = std::move(stack.back());
        stack.pop_back();
        int level = int(cur.members.size());
        if (level == max_level) {
            tree.branches.push_back({cur.members, {}, false});
            continue;
        }
        const auto& next_set = tree.levels[std::size_t(level)];
        std::int64_t qm = tree.levels[std::size_t(level) - 1].qm;
        bool extended = false;
        for (std::int64_t n : next_set.members) {
            if (n % qm == cur.members.back()) {
                Frame f2 = cur;
                f2.members.push_back(n);
                stack.push_back(std::move(f2));
                extended = true;
            }
        }
        if (!extended) tree.branches.push_back({cur.members, {}, true});
    }

    for (auto& br : tree.branches) {
        br.digits.resize(br.members.size());
        std::int64_t prev = 0, qpow = 1;
        for (std::size_t i = 0; i < br.members.size(); ++i) {
            br.digits[i] = (br.members[i] - prev) / qpow;
            prev = br.members[i];
            qpow *= tree.q;
        }
    }
    std::sort(tree.branches.begin(), tree.branches.end(),
              [](const NuBranch& a, const NuBranch& b) { return a.digits < b.digits; });
    return tree;
}

// ---- BSR certification -------------------------------------------------------

namespace {

BsrCertificate certify_branch(const NuTree& tree, const NuBranch& branch,
                              bool window_minus_one_zero) {
    BsrCertificate cert;
    cert.digit_prefix = branch.digits;
    cert.dead_end = branch.dead;
    cert.max_level = tree.max_level;
    const int k = int(branch.digits.size());
    if (branch.dead || k < 2) return cert;

    // canonical completion: minimal preperiod first, then minimal period,
    // with two full periods observed
    for (int start = 1; start <= k; ++start) {
        for (int j = 1; start + 2 * j - 1 <= k; ++j) {
            bool periodic = true;
            for (int i = start; i + j <= k; ++i) {
                if (branch.digits[std::size_t(i) - 1] != branch.digits[std::size_t(i + j) - 1]) {
                    periodic = false;
                    break;
                }
            }
            if (!periodic) continue;

            DigitBlock block;
            block.base = tree.q;
            block.preperiod.assign(branch.digits.begin(), branch.digits.begin() + (start - 1));
            block.period.assign(branch.digits.begin() + (start - 1),
                                branch.digits.begin() + (start - 1) + j);
            PadicRational value = from_periodic_digits(block);

            // F-pure modules only carry roots in [-1, 0]; a parse outside is
            // refuted even when the observed window matches
            if (window_minus_one_zero &&
                (padic_cmp(value, -1, 1) < 0 || padic_cmp(value, 0, 1) > 0))
                continue;

            // re-verify every computed level against the stored nu sets
            bool ok = true;
            for (int m = 1; m <= tree.max_level && ok; ++m) {
                std::int64_t am = digits(value, m, tree.q);
                const auto& mem = tree.levels[std::size_t(m) - 1].members;
                ok = std::binary_search(mem.begin(), mem.end(), am);
            }
            if (!ok) continue;

            cert.status = CertStatus::certified_rational;
            cert.value = value;
            cert.period = j;
            cert.preperiod_level = start;
            cert.verified_levels = tree.max_level;
            return cert;
        }
    }
    return cert;
}

std::vector<BsrCertificate> certify_tree(const NuTree& tree, bool window) {
    std::vector<BsrCertificate> certs;
    certs.reserve(tree.branches.size());
    for (const auto& br : tree.branches)
        certs.push_back(certify_branch(tree, br, window));
    return certs;
}

} // namespace

std::vector<BsrCertificate> bsr_roots(const NuTree& tree) {
    return certify_tree(tree, false);
}

std::vector<BsrCertificate> bsr_roots(const NuTree& tree, bool f_pure_window) {
    return certify_tree(tree, f_pure_window);
}

std::vector<BsrCertificate> bsr_roots(const CartierStructure& S, const Ideal& N,
                                      const Polynomial& f, int max_level) {
    NuTree tree = nu_tree(S, N, f, max_level);
    return certify_tree(tree, is_f_pure(S, N));
}

std::vector<PadicRational> certified_values(const std::vector<BsrCertificate>& certs) {
    std::vector<PadicRational> vals;
    for (const auto& c : certs) {
        if (c.status == CertStatus::certified_rational) vals.push_back(*c.value);
    }
    return vals;
}

// ---- D-side ------------------------------------------------------------------

DsideReport dside_bsr_check(const CartierStructure& S, const Ideal& N,
                            const Polynomial& f, int m) {
    DsideReport rep;
    rep.level = m;
    rep.nu_members = nu_set(S, N, f, m).members;

    // independent pass: realize D_X^{(em)} f^n N as (C^m(f^n N))^[q^m]
    const std::int64_t Q = pow_checked(S.q(), m);
    ScanImages scan = scan_images(S, N, f, m, Q);
    std::vector<Ideal> brackets = parallel_map<Ideal>(scan.images.size(), [&](std::size_t n) {
        Ideal b = frobenius_power(scan.images[n], Q);
        (void)b.reduced_gb();
        return b;
    });
    for (std::int64_t n = 0; n < Q; ++n) {
        if (!ideal_equal(brackets[std::size_t(n)], brackets[std::size_t(n) + 1]))
            rep.dside_members.push_back(n);
    }
    rep.agree = rep.nu_members == rep.dside_members;
    return rep;
}

// ---- test ideals ---------------------------------------------------------------

TestIdealRecord test_ideal(const CartierStructure& S, const Ideal& M,
                           const Polynomial& f, const Rat64& t) {
    if (f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "f must be nonzero");
    if (t.num < 0) raise(ErrorKind::InvalidArgument, "t must be >= 0");
    if (!is_f_pure(S, M)) raise(ErrorKind::NotFPure, "M is not F-pure under S");

    TestIdealRecord rec;
    rec.t = t;
    if (t.num == 0) {
        rec.ideal = M;
        rec.witness_level = 0;
        return rec;
    }

    // normalize the denominator to a power of q = p^e
    const fp_t p = S.ring->p;
    const std::int64_t q = S.q();
    std::int64_t den = t.den;
    int pk = 0;
    while (den > 1 && den % p == 0) {
        den /= p;
        ++pk;
    }
    if (den != 1)
        raise(ErrorKind::InvalidArgument,
              "t must have a power-of-p denominator, got " + t.str());
    int m = (pk + S.e - 1) / S.e;
    std::int64_t scale = 1;
    for (int i = 0; i < m * S.e - pk; ++i) scale *= p;
    std::int64_t n = t.num * scale; // t = n / q^m
    if (m == 0) m = 1, n *= q;      // integer t: use level 1 with n = t*q

    Ideal current = cartier_power_image(S, ideal_scale(f.pow(n), M), m);
    rec.witness_level = m;
    // tau(M, f^{n/q^m}) = C^m(f^n M) exactly; the ascent check below verifies
    // stabilization rather than assuming it
    const int cap = global_caps().iter_cap;
    std::int64_t n_next = n * q;
    for (int mm = m + 1; mm <= m + cap; ++mm) {
        check_exp_cap(pow_checked(q, mm));
        Ideal next = cartier_power_image(S, ideal_scale(f.pow(n_next), M), mm);
        if (!ideal_contains(next, current))
            raise(ErrorKind::InternalMismatch, "test ideal chain failed to ascend");
        if (ideal_equal(next, current)) {
            rec.ideal = current;
            return rec;
        }
        current = next;
        rec.witness_level = mm;
        n_next *= q;
    }
    raise(ErrorKind::IterationCapExceeded, "test ideal did not stabilize");
}

// ---- FJN ---------------------------------------------------------------------

namespace {

struct ChainNode {
    std::vector<std::int64_t> s; // s_m = jump index - 1 per level, real-coherent
};

Rat64 rat_from_real_digits(const std::vector<std::int64_t>& e, int start, int j,
                           std::int64_t q) {
    // value with base-q expansion 0.e_1 e_2 ...,  purely periodic from `start`
    // (1-indexed) with period j
    cpp_int num = 0, den = 1;
    for (int i = 1; i < start; ++i) {
        num = num * q + e[std::size_t(i) - 1];
        den *= q;
    }
    cpp_int pnum = 0;
    for (int i = 0; i < j; ++i) pnum = pnum * q + e[std::size_t(start + i) - 1];
    cpp_int qj = 1;
    for (int i = 0; i < j; ++i) qj *= q;
    // num/den + (1/den) * pnum/(q^j - 1)
    cpp_int nn = num * (qj - 1) + pnum;
    cpp_int dd = den * (qj - 1);
    cpp_int g = gcd(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    if (nn > std::numeric_limits<std::int64_t>::max() ||
        dd > std::numeric_limits<std::int64_t>::max())
        raise(ErrorKind::Overflow, "certified exponent exceeds 64-bit range");
    return make_rat(std::int64_t(nn), std::int64_t(dd));
}

} // namespace

FjnReport fjn_exponents(const CartierStructure& S, const Ideal& M, const Polynomial& f,
                        int level) {
    if (level < 1) raise(ErrorKind::InvalidArgument, "level must be >= 1");
    if (f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "f must be nonzero");
    if (!is_f_pure(S, M)) raise(ErrorKind::NotFPure, "M is not F-pure under S");

    FjnReport rep;
    rep.level = level;
    const std::int64_t q = S.q();
    const std::int64_t QL = pow_checked(q, level);

    // tau on the finest grid t = n/q^level, n = 0..q^level
    std::vector<Ideal> tau = parallel_map<Ideal>(std::size_t(QL) + 1, [&](std::size_t n) {
        Ideal v = test_ideal(S, M, f, make_rat(std::int64_t(n), QL)).ideal;
        (void)v.reduced_gb();
        return v;
    });
    auto tau_at = [&](std::int64_t n) -> const Ideal& { return tau[std::size_t(n)]; };

    // jump sets per refinement level, read off the finest grid
    std::vector<std::vector<std::int64_t>> jumps(std::size_t(level) + 1);
    for (int m = 1; m <= level; ++m) {
        std::int64_t stride = QL / pow_checked(q, m);
        std::int64_t qm = pow_checked(q, m);
        for (std::int64_t n = 1; n <= qm; ++n) {
            if (!ideal_equal(tau_at((n - 1) * stride), tau_at(n * stride)))
                jumps[std::size_t(m)].push_back(n);
        }
    }

    // interval chains: jump n at level m+1 nests into ceil(n/q) at level m
    std::vector<ChainNode> chains; // maximal chains, full-length or terminated
    {
        std::vector<ChainNode> active;
        for (std::int64_t n1 : jumps[1]) active.push_back({{n1 - 1}});
        for (int m = 2; m <= level; ++m) {
            std::vector<ChainNode> next;
            for (const auto& chain : active) {
                std::int64_t s_prev = chain.s.back();
                bool extended = false;
                for (std::int64_t n : jumps[std::size_t(m)]) {
                    std::int64_t s = n - 1;
                    if (s >= q * s_prev && s <= q * s_prev + q - 1) {
                        ChainNode c2 = chain;
                        c2.s.push_back(s);
                        next.push_back(std::move(c2));
                        extended = true;
                    }
                }
                if (!extended) chains.push_back(chain); // terminated early
            }
            active = std::move(next);
        }
        chains.insert(chains.end(), active.begin(), active.end());
    }

    std::vector<FjnExponent> found;
    std::vector<FjnInterval> unresolved;

    for (const auto& chain : chains) {
        const int L = int(chain.s.size());
        // real digits e_m with s_m = q s_{m-1} + e_m
        std::vector<std::int64_t> e(std::size_t(L), 0);
        std::int64_t prev = 0;
        for (int m = 1; m <= L; ++m) {
            e[std::size_t(m) - 1] = chain.s[std::size_t(m) - 1] - q * prev;
            prev = chain.s[std::size_t(m) - 1];
        }
        bool certified = false;
        for (int start = 1; start <= L && !certified; ++start) {
            for (int j = 1; start + 2 * j - 1 <= L && !certified; ++j) {
                bool periodic = true;
                for (int i = start; i + j <= L; ++i) {
                    if (e[std::size_t(i) - 1] != e[std::size_t(i + j) - 1]) {
                        periodic = false;
                        break;
                    }
                }
                if (!periodic) continue;
                Rat64 t_star = rat_from_real_digits(e, start, j, q);
                if (t_star.num <= 0) continue; // left exponents are positive
                // psi^- membership at every computed level
                bool ok = true;
                for (int m = 1; m <= L && ok; ++m) {
                    std::int64_t qm = pow_checked(q, m);
                    ok = psi_minus(t_star, qm) == chain.s[std::size_t(m) - 1];
                }
                if (!ok) continue;
                found.push_back({t_star, FjnSide::left, true, j});
                certified = true;
            }
        }
        if (!certified) {
            std::int64_t qL = pow_checked(q, L);
            FjnInterval iv;
            iv.lo = make_rat(chain.s[std::size_t(L) - 1], qL);
            iv.hi = make_rat(chain.s[std::size_t(L) - 1] + 1, qL);
            unresolved.push_back(iv);
        }
    }

    // Right exponents. By right-continuity, FJN^+ is empty once M = M_{f!};
    // the right limit of tau at 0 is exactly M_{f!}, and tau(1+e) = f*tau(e)
    // makes the jump at 1 equivalent to the jump at 0. Interior candidates
    // (jump-interval left endpoints in (0,1)) use stabilized right-limits.
    bool has_zero_extension_drop =
        !ideal_equal(zero_extension(S, M, f).stable_ideal, M);
    if (has_zero_extension_drop) {
        found.push_back({make_rat(0, 1), FjnSide::right, true, 0});
        found.push_back({make_rat(1, 1), FjnSide::right, true, 0});

        std::set<std::pair<std::int64_t, std::int64_t>> interior; // (num, den) of t
        for (const auto& chain : chains) {
            const int L = int(chain.s.size());
            std::int64_t qL = pow_checked(q, L);
            Rat64 lo = make_rat(chain.s[std::size_t(L) - 1], qL);
            if (lo.num > 0 && rat_cmp(lo, make_rat(1, 1)) < 0)
                interior.insert({lo.num, lo.den});
        }
        const int slack = 3;
        for (const auto& [tn, td] : interior) {
            Rat64 t_c = make_rat(tn, td);
            Ideal at_t = test_ideal(S, M, f, t_c).ideal;
            bool stabilized = false;
            bool dropped = false;
            try {
                Ideal prev_limit;
                bool have_prev = false;
                for (int mm = level; mm <= level + slack; ++mm) {
                    std::int64_t qmm = pow_checked(q, mm);
                    // t_c + 1/q^mm
                    Rat64 t_eps = make_rat(t_c.num * (qmm / t_c.den) + 1, qmm);
                    Ideal lim = test_ideal(S, M, f, t_eps).ideal;
                    if (have_prev && ideal_equal(lim, prev_limit)) {
                        stabilized = true;
                        dropped = !ideal_equal(lim, at_t);
                        break;
                    }
                    prev_limit = lim;
                    have_prev = true;
                }
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::ExponentCapExceeded) throw;
                stabilized = false;
            }
            if (stabilized && dropped) {
                found.push_back({t_c, FjnSide::right, true, 0});
            } else if (!stabilized) {
                FjnInterval iv;
                iv.lo = t_c;
                iv.hi = make_rat(t_c.num * (QL / t_c.den) + 1, QL);
                iv.unresolved_right = true;
                unresolved.push_back(iv);
            }
        }
    }

    // a chain interval whose left endpoint carries a certified right jump is
    // fully explained by it (tau is constant on the open interval beyond)
    unresolved.erase(std::remove_if(unresolved.begin(), unresolved.end(),
                                    [&](const FjnInterval& iv) {
                                        if (iv.unresolved_right) return false;
                                        for (const auto& ex : found) {
                                            if (ex.side == FjnSide::right && ex.certified &&
                                                rat_cmp(ex.t, iv.lo) == 0)
                                                return true;
                                        }
                                        return false;
                                    }),
                     unresolved.end());

    // merge duplicate t values (left + right at the same point = both)
    std::sort(found.begin(), found.end(), [](const FjnExponent& a, const FjnExponent& b) {
        int c = rat_cmp(a.t, b.t);
        if (c != 0) return c < 0;
        return int(a.side) < int(b.side);
    });
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (!rep.exponents.empty() && rat_cmp(rep.exponents.back().t, found[i].t) == 0) {
            if (rep.exponents.back().side != found[i].side)
                rep.exponents.back().side = FjnSide::both;
        } else {
            rep.exponents.push_back(found[i]);
        }
    }
    rep.unresolved = std::move(unresolved);
    return rep;
}

// ---- zero root / crosscheck / probe -------------------------------------------

bool zero_root_test(const CartierStructure& S, const Ideal& M, const Polynomial& f) {
    StabilizationRecord rec = zero_extension(S, M, f);
    return !ideal_equal(rec.stable_ideal, M);
}

CrosscheckReport bsr_fjn_crosscheck(const CartierStructure& S, const Ideal& M,
                                    const Polynomial& f, int max_level) {
    CrosscheckReport rep;
    auto certs = bsr_roots(S, M, f, max_level);
    rep.bsr_values = certified_values(certs);
    FjnReport fjn = fjn_exponents(S, M, f, max_level);
    for (const auto& ex : fjn.exponents) {
        if (!ex.certified) continue;
        if (ex.side == FjnSide::left || ex.side == FjnSide::both) rep.fjn_left.push_back(ex.t);
        if (ex.side == FjnSide::right || ex.side == FjnSide::both)
            rep.fjn_right.push_back(ex.t);
    }
    rep.zero_root = zero_root_test(S, M, f);

    const fp_t p = S.ring->p;

    // certified BSR in [-1, 0) vs -(left exponents in (0,1] with p-free den)
    std::set<std::pair<std::int64_t, std::int64_t>> lhs, rhs;
    for (const auto& v : rep.bsr_values) {
        if (padic_cmp(v, -1, 1) >= 0 && padic_cmp(v, 0, 1) < 0) lhs.insert({-v.num, v.den});
    }
    for (const auto& t : rep.fjn_left) {
        if (t.num > 0 && rat_cmp(t, make_rat(1, 1)) <= 0 && t.den % p != 0)
            rhs.insert({t.num, t.den});
    }
    if (lhs != rhs) {
        std::string msg = "BSR window vs FJN^- mismatch: bsr={";
        for (auto& [n, d] : lhs) msg += make_rat(n, d).str() + ",";
        msg += "} fjn={";
        for (auto& [n, d] : rhs) msg += make_rat(n, d).str() + ",";
        msg += "}";
        rep.mismatches.push_back(msg);
    }

    // 0 in BSR <=> right jump at 0 <=> M_{f!} != M
    bool zero_in_bsr = false;
    for (const auto& v : rep.bsr_values)
        if (v.num == 0) zero_in_bsr = true;
    bool right_at_zero = false;
    for (const auto& t : rep.fjn_right)
        if (t.num == 0) right_at_zero = true;
    if (zero_in_bsr != rep.zero_root)
        rep.mismatches.push_back("0 in BSR disagrees with the M_{f!} test");
    if (right_at_zero != rep.zero_root)
        rep.mismatches.push_back("right jump at 0 disagrees with the M_{f!} test");

    rep.agree = rep.mismatches.empty();
    return rep;
}

ProbeReport bound_assumption_probe(const CartierStructure& S, const Ideal& N,
                                   const Polynomial& f, int max_level) {
    if (max_level < 1) raise(ErrorKind::InvalidArgument, "max_level must be >= 1");
    ProbeReport rep;
    rep.max_level = max_level;
    for (int m = 1; m <= max_level; ++m)
        rep.counts.push_back(std::int64_t(nu_set(S, N, f, m).members.size()));
    rep.max = *std::max_element(rep.counts.begin(), rep.counts.end());
    rep.level_stable = rep.counts.size() < 2 ||
                       rep.counts[rep.counts.size() - 1] == rep.counts[rep.counts.size() - 2];
    return rep;
}

} // namespace fcart
