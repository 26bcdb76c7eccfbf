#include "fcart/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "fcart/error.hpp"
#include "fcart/parse.hpp"

namespace fcart {
namespace oracle {

using boost::multiprecision::cpp_int;

// ---- univariate closed form ---------------------------------------------------

std::int64_t univariate_image_exp(const UnivariateCase& c, int m, std::int64_t n) {
    // exponent of C^m((x^{k + n d})) with accumulated twist shift
    cpp_int qm = 1;
    for (int i = 0; i < m; ++i) qm *= c.q;
    cpp_int w_m = c.twist_exp * (qm - 1) / (c.q - 1);
    cpp_int num = cpp_int(c.module_exp) + cpp_int(n) * c.f_exp + w_m;
    cpp_int r = num / qm;
    return std::int64_t(r);
}

std::vector<std::int64_t> univariate_nu_members(const UnivariateCase& c, int m) {
    std::int64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= c.q;
    std::vector<std::int64_t> members;
    for (std::int64_t n = 0; n < qm; ++n) {
        if (univariate_image_exp(c, m, n) != univariate_image_exp(c, m, n + 1))
            members.push_back(n);
    }
    return members;
}

std::int64_t univariate_test_ideal_exp(const UnivariateCase& c, std::int64_t t_num,
                                       std::int64_t t_den) {
    // tau = C^m(f^n N) once t = n/q^m; raise m until the exponent stabilizes
    std::int64_t prev = -1;
    for (int m = 1; m <= 40; ++m) {
        cpp_int qm = 1;
        for (int i = 0; i < m; ++i) qm *= c.q;
        // n = ceil(t q^m)
        cpp_int n = (cpp_int(t_num) * qm + t_den - 1) / t_den;
        cpp_int w_m = c.twist_exp * (qm - 1) / (c.q - 1);
        cpp_int num = cpp_int(c.module_exp) + n * c.f_exp + w_m;
        std::int64_t exp = std::int64_t(num / qm);
        if (exp == prev) return exp;
        prev = exp;
    }
    raise(ErrorKind::IterationCapExceeded, "univariate tau oracle did not stabilize");
}

// ---- monomial-ideal path --------------------------------------------------------

MonomialIdeal make_monomial_ideal(std::vector<std::vector<std::int64_t>> gens) {
    // prune to the minimal antichain, sort for canonical comparison
    std::vector<std::vector<std::int64_t>> minimal;
    auto divides = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (kept != g && divides(kept, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                         [&](const std::vector<std::int64_t>& kept) {
                                             return divides(g, kept) && g != kept;
                                         }),
                          minimal.end());
            minimal.push_back(g);
        }
    }
    std::sort(minimal.begin(), minimal.end());
    return MonomialIdeal{std::move(minimal)};
}

MonomialIdeal monomial_scale(const MonomialIdeal& I, const std::vector<std::int64_t>& m) {
    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& g : I.gens) {
        std::vector<std::int64_t> s(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + m[i];
        gens.push_back(std::move(s));
    }
    return make_monomial_ideal(std::move(gens));
}

MonomialIdeal monomial_cartier_image(const MonomialIdeal& I,
                                     const std::vector<std::int64_t>& W, std::int64_t q) {
    // C(R·x^E) = (x^{floor((E+W)/q)}) per generator
    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& g : I.gens) {
        std::vector<std::int64_t> s(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) s[i] = (g[i] + W[i]) / q;
        gens.push_back(std::move(s));
    }
    return make_monomial_ideal(std::move(gens));
}

MonomialIdeal monomial_cartier_power(const MonomialIdeal& I,
                                     const std::vector<std::int64_t>& W, std::int64_t q,
                                     int m) {
    MonomialIdeal cur = I;
    for (int i = 0; i < m; ++i) cur = monomial_cartier_image(cur, W, q);
    return cur;
}

bool monomial_ideal_member(const MonomialIdeal& I, const std::vector<std::int64_t>& mono) {
    for (const auto& g : I.gens) {
        bool div = true;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > mono[i]) div = false;
        if (div) return true;
    }
    return false;
}

Ideal to_engine_ideal(const RingPtr& ring, const MonomialIdeal& I, MonomialOrder order) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens) {
        std::vector<std::int64_t> e = g;
        e.resize(ring->nvars, 0);
        gens.push_back(Polynomial::monomial(ring, Monomial(std::move(e)), 1));
    }
    return Ideal(ring, std::move(gens), order);
}

// ---- exact integer binomial ------------------------------------------------------

fp_t bignum_binomial_mod(std::int64_t a, std::int64_t n, fp_t p) {
    if (n < 0 || a < 0) return 0;
    if (n > a) return 0;
    cpp_int res = 1;
    if (n > a - n) n = a - n;
    for (std::int64_t i = 1; i <= n; ++i) {
        res *= (a + 1 - i);
        res /= i; // exact at every step
    }
    cpp_int r = res % p;
    return fp_t(r);
}

// ---- dense root extraction ---------------------------------------------------------

RootDecomposition dense_root_decompose(const Polynomial& f, std::int64_t q) {
    power_of_p_exponent(q, f.ring()->p);
    const RingPtr& ring = f.ring();
    const std::size_t nvars = ring->nvars;

    std::vector<std::int64_t> bound(nvars, 1); // exclusive per-variable bound
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < nvars; ++i)
            bound[i] = std::max(bound[i], t.m.e[i] + 1);
    std::size_t total = 1;
    for (auto b : bound) {
        if (total > (std::size_t(1) << 28) / std::size_t(b))
            raise(ErrorKind::Overflow, "dense oracle grid too large");
        total *= std::size_t(b);
    }

    std::vector<fp_t> grid(total, 0);
    auto flatten = [&](const std::vector<std::int64_t>& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < nvars; ++i) idx = idx * std::size_t(bound[i]) + std::size_t(e[i]);
        return idx;
    };
    for (const auto& t : f.terms()) grid[flatten(t.m.e)] = t.c;

    std::map<std::vector<std::int64_t>, std::vector<Term>> buckets;
    std::vector<std::int64_t> e(nvars, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (grid[idx] != 0) {
            std::vector<std::int64_t> residue(nvars);
            Monomial quot(nvars);
            for (std::size_t i = 0; i < nvars; ++i) {
                residue[i] = e[i] % q;
                quot.e[i] = e[i] / q;
            }
            buckets[residue].push_back({std::move(quot), grid[idx]});
        }
        // odometer over the dense grid
        for (std::size_t i = nvars; i-- > 0;) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
        }
    }

    RootDecomposition dec;
    dec.q = q;
    for (auto& [residue, terms] : buckets) {
        Polynomial h(ring, std::move(terms));
        if (!h.is_zero()) dec.parts.emplace(residue, std::move(h));
    }
    return dec;
}

// ---- brute-force minimal-K search ----------------------------------------------------

std::optional<MonomialIdeal> minimal_bracket_root(const MonomialIdeal& J, std::int64_t q,
                                                  std::size_t nvars,
                                                  std::int64_t max_gen_deg) {
    // candidate generator pool: all monomials of total degree <= max_gen_deg
    std::vector<std::vector<std::int64_t>> pool;
    std::vector<std::int64_t> cur(nvars, 0);
    while (true) {
        std::int64_t deg = 0;
        for (auto v : cur) deg += v;
        if (deg <= max_gen_deg) pool.push_back(cur);
        std::size_t i = nvars;
        bool done = true;
        while (i-- > 0) {
            if (cur[i] < max_gen_deg) {
                ++cur[i];
                for (std::size_t j = i + 1; j < nvars; ++j) cur[j] = 0;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    if (pool.size() > 20) raise(ErrorKind::Overflow, "search pool too large");

    auto contains_bracket = [&](const MonomialIdeal& K) {
        // J ⊆ K^[q]: every generator of J divisible by some q-scaled gen of K
        for (const auto& g : J.gens) {
            bool inside = false;
            for (const auto& k : K.gens) {
                bool div = true;
                for (std::size_t i = 0; i < nvars; ++i)
                    if (k[i] * q > g[i]) div = false;
                if (div) {
                    inside = true;
                    break;
                }
            }
            if (!inside) return false;
        }
        return true;
    };

    auto leq = [&](const MonomialIdeal& A, const MonomialIdeal& B) {
        // A ⊆ B as monomial ideals
        for (const auto& g : A.gens)
            if (!monomial_ideal_member(B, g)) return false;
        return true;
    };

    std::optional<MonomialIdeal> best;
    const std::size_t subsets = std::size_t(1) << pool.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::vector<std::vector<std::int64_t>> gens;
        for (std::size_t b = 0; b < pool.size(); ++b)
            if (mask & (std::size_t(1) << b)) gens.push_back(pool[b]);
        MonomialIdeal K = make_monomial_ideal(std::move(gens));
        if (!contains_bracket(K)) continue;
        if (!best || leq(K, *best)) best = K;
    }
    if (best) {
        // uniqueness of the minimum: every admissible K must contain it
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::vector<std::vector<std::int64_t>> gens;
            for (std::size_t b = 0; b < pool.size(); ++b)
                if (mask & (std::size_t(1) << b)) gens.push_back(pool[b]);
            MonomialIdeal K = make_monomial_ideal(std::move(gens));
            if (contains_bracket(K) && !leq(*best, K))
                raise(ErrorKind::InternalMismatch, "no unique minimal bracket root");
        }
    }
    return best;
}

// ---- comparison front end --------------------------------------------------------------

const char* oracle_kind_name(OracleKind k) {
    switch (k) {
        case OracleKind::univariate_closed_form: return "univariate_closed_form";
        case OracleKind::dense_root_extraction: return "dense_root_extraction";
        case OracleKind::monomial_ideal_path: return "monomial_ideal_path";
        case OracleKind::integer_binomial: return "integer_binomial";
    }
    return "unknown";
}

namespace {

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

// a polynomial c*x_i^d in exactly one variable, or a constant
std::optional<std::pair<std::size_t, std::int64_t>> single_variable_monomial(const Polynomial& f) {
    if (f.is_zero() || f.term_count() != 1) return std::nullopt;
    const Monomial& m = f.terms()[0].m;
    std::size_t var = m.nvars();
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] > 0) {
            if (var != m.nvars()) return std::nullopt;
            var = i;
        }
    }
    if (var == m.nvars()) return std::make_pair(std::size_t(0), std::int64_t(0)); // constant
    return std::make_pair(var, m.e[var]);
}

std::optional<MonomialIdeal> as_monomial_ideal(const std::vector<Polynomial>& gens,
                                               std::size_t nvars) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.term_count() != 1) return std::nullopt; // unit coefficients scale away
        std::vector<std::int64_t> e = g.terms()[0].m.e;
        e.resize(nvars, 0);
        out.push_back(std::move(e));
    }
    return make_monomial_ideal(std::move(out));
}

} // namespace

OracleReport oracle_compare(const OracleJob& job) {
    OracleReport rep;
    auto ring = make_ring(job.p, job.vars);
    MonomialOrder order{};

    if (job.command == "lucas") {
        PadicRational alpha = parse_padic(job.alpha_text, job.p);
        // smallest m with p^m > n
        int m = 1;
        std::int64_t pm = job.p;
        while (pm <= job.n) {
            pm *= job.p;
            ++m;
        }
        std::int64_t am = digits(alpha, m, job.p);
        fp_t main = lucas_binomial(alpha, job.n);
        fp_t orc = bignum_binomial_mod(am, job.n, job.p);
        rep.task = "lucas alpha=" + alpha.str() + " n=" + std::to_string(job.n) +
                   " p=" + std::to_string(job.p);
        rep.kind = OracleKind::integer_binomial;
        rep.main_result = std::to_string(main);
        rep.oracle_result = std::to_string(orc);
        rep.agree = main == orc;
        return rep;
    }

    if (job.command == "rootdec") {
        Polynomial f = parse_polynomial(job.f_text, ring);
        std::int64_t q = 1;
        for (int i = 0; i < job.e; ++i) q *= job.p;
        RootDecomposition sparse = root_decompose(f, q);
        RootDecomposition dense = dense_root_decompose(f, q);
        rep.task = "rootdec f=" + f.str() + " q=" + std::to_string(q);
        rep.kind = OracleKind::dense_root_extraction;
        bool agree = sparse.parts.size() == dense.parts.size();
        std::string smain, sorc;
        for (const auto& [a, h] : sparse.parts) smain += join_ints(a) + ":" + h.str() + ";";
        for (const auto& [a, h] : dense.parts) sorc += join_ints(a) + ":" + h.str() + ";";
        agree = agree && smain == sorc;
        rep.main_result = smain;
        rep.oracle_result = sorc;
        rep.agree = agree;
        return rep;
    }

    // regimes below need the Cartier data
    Polynomial f = parse_polynomial(job.f_text, ring);
    Polynomial twist = parse_polynomial(job.twist_text, ring);
    std::vector<Polynomial> module_gens;
    for (const auto& text : job.module_texts.empty() ? std::vector<std::string>{"1"}
                                                     : job.module_texts)
        module_gens.push_back(parse_polynomial(text, ring));
    CartierStructure S = make_cartier(ring, job.e, twist);
    Ideal N(ring, module_gens, order);

    auto f_single = single_variable_monomial(f);
    auto tw_single = single_variable_monomial(twist);
    auto n_mono = as_monomial_ideal(module_gens, ring->nvars);

    if (job.command == "nu") {
        // univariate regime: f, twist, N all powers of one variable
        bool univariate = f_single && f_single->second >= 1 && tw_single && n_mono &&
                          n_mono->gens.size() == 1;
        if (univariate) {
            std::size_t var = f_single->first;
            bool same_var = (tw_single->second == 0 || tw_single->first == var);
            const auto& ngen = n_mono->gens[0];
            for (std::size_t i = 0; i < ngen.size(); ++i)
                if (ngen[i] != 0 && i != var) same_var = false;
            if (same_var) {
                UnivariateCase c;
                c.q = S.q();
                c.twist_exp = tw_single->second;
                c.module_exp = ngen[var];
                c.f_exp = f_single->second;
                auto main = nu_set(S, N, f, job.level).members;
                auto orc = univariate_nu_members(c, job.level);
                rep.task = "nu univariate f=" + f.str() + " m=" + std::to_string(job.level);
                rep.kind = OracleKind::univariate_closed_form;
                rep.main_result = join_ints(main);
                rep.oracle_result = join_ints(orc);
                rep.agree = main == orc;
                return rep;
            }
        }
        // monomial regime: f, twist single-term; N a monomial ideal
        if (f.term_count() == 1 && twist.term_count() == 1 && n_mono) {
            std::vector<std::int64_t> W = twist.terms()[0].m.e;
            W.resize(ring->nvars, 0);
            std::vector<std::int64_t> fe = f.terms()[0].m.e;
            fe.resize(ring->nvars, 0);
            std::int64_t qm = 1;
            for (int i = 0; i < job.level; ++i) qm *= S.q();
            std::vector<std::int64_t> orc_members;
            for (std::int64_t n = 0; n < qm; ++n) {
                std::vector<std::int64_t> fa(ring->nvars, 0), fb(ring->nvars, 0);
                for (std::size_t i = 0; i < ring->nvars; ++i) {
                    fa[i] = fe[i] * n;
                    fb[i] = fe[i] * (n + 1);
                }
                MonomialIdeal ia =
                    monomial_cartier_power(monomial_scale(*n_mono, fa), W, S.q(), job.level);
                MonomialIdeal ib =
                    monomial_cartier_power(monomial_scale(*n_mono, fb), W, S.q(), job.level);
                if (!(ia == ib)) orc_members.push_back(n);
            }
            auto main = nu_set(S, N, f, job.level).members;
            rep.task = "nu monomial f=" + f.str() + " m=" + std::to_string(job.level);
            rep.kind = OracleKind::monomial_ideal_path;
            rep.main_result = join_ints(main);
            rep.oracle_result = join_ints(orc_members);
            rep.agree = main == orc_members;
            return rep;
        }
        raise(ErrorKind::UnsupportedRegime, "no oracle covers this nu job");
    }

    if (job.command == "testideal") {
        Rat64 t{};
        {
            auto slash = job.t_text.find('/');
            if (slash == std::string::npos)
                t = make_rat(std::stoll(job.t_text), 1);
            else
                t = make_rat(std::stoll(job.t_text.substr(0, slash)),
                             std::stoll(job.t_text.substr(slash + 1)));
        }
        if (f.term_count() == 1 && twist.term_count() == 1 && n_mono) {
            std::vector<std::int64_t> W = twist.terms()[0].m.e;
            W.resize(ring->nvars, 0);
            std::vector<std::int64_t> fe = f.terms()[0].m.e;
            fe.resize(ring->nvars, 0);
            // oracle: raise the level until the monomial tau stabilizes
            MonomialIdeal prev{};
            bool have_prev = false;
            MonomialIdeal stable{};
            for (int m = 1; m <= 40; ++m) {
                std::int64_t qm = 1;
                for (int i = 0; i < m; ++i) qm *= S.q();
                std::int64_t n = (t.num * qm + t.den - 1) / t.den; // ceil(t q^m)
                std::vector<std::int64_t> fn(ring->nvars);
                for (std::size_t i = 0; i < ring->nvars; ++i) fn[i] = fe[i] * n;
                MonomialIdeal img =
                    monomial_cartier_power(monomial_scale(*n_mono, fn), W, S.q(), m);
                if (have_prev && img == prev) {
                    stable = img;
                    break;
                }
                prev = img;
                have_prev = true;
                if (m == 40)
                    raise(ErrorKind::IterationCapExceeded, "monomial tau did not stabilize");
            }
            Ideal main = test_ideal(S, N, f, t).ideal;
            Ideal orc = to_engine_ideal(ring, stable, order);
            rep.task = "testideal monomial f=" + f.str() + " t=" + t.str();
            rep.kind = OracleKind::monomial_ideal_path;
            rep.main_result = main.key();
            rep.oracle_result = orc.key();
            rep.agree = ideal_equal(main, orc);
            return rep;
        }
        raise(ErrorKind::UnsupportedRegime, "no oracle covers this testideal job");
    }

    raise(ErrorKind::UnsupportedRegime, "no oracle for command '" + job.command + "'");
}

} // namespace oracle
} // namespace fcart
