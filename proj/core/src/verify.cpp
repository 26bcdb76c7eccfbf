#include "fcart/verify.hpp"

#include <algorithm>

#include "fcart/error.hpp"
#include "fcart/graph_bf.hpp"
#include "fcart/parallel.hpp"
#include "fcart/parse.hpp"
#include "fcart/random.hpp"

namespace fcart {

namespace {

void push_summary(VerifySuiteResult& out, const std::string& battery, std::size_t checked,
                  const std::vector<json>& failed) {
    json rec{{"battery", battery},
             {"checked", checked},
             {"failures", failed.size()},
             {"pass", failed.empty()}};
    if (!failed.empty()) {
        json arr = json::array();
        for (std::size_t i = 0; i < failed.size() && i < 20; ++i) arr.push_back(failed[i]);
        rec["failed_instances"] = arr;
    }
    out.records.push_back(rec);
    out.failures += failed.size();
}

// ---- graph suite -----------------------------------------------------------

VerifySuiteResult run_graph_suite(std::uint64_t seed) {
    VerifySuiteResult out;
    out.suite = "graph";
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto ring = make_ring(p, {"x", "y"});
        Rng rng(seed + p);
        for (int m = 1; m <= 2; ++m) {
            std::int64_t pm = 1;
            for (int i = 0; i < m; ++i) pm *= p;
            for (int trial = 0; trial < 20; ++trial) {
                Polynomial f = rng.polynomial(ring, 3, 4);
                for (std::int64_t n = 0; n < pm; ++n) {
                    json base{{"p", p}, {"m", m}, {"n", n}, {"f", f.str()}};
                    bool paths = true, shift = true, trans = true, theta = true;
                    try {
                        (void)q_element(ring, f, m, n); // asserts path agreement
                    } catch (const Error&) {
                        paths = false;
                    }
                    shift = verify_t_shift(ring, f, m, n);
                    trans = verify_transition(ring, f, m, n);
                    theta = verify_theta_eigenvalue(ring, f, m, n);
                    json rec = base;
                    rec["construction_paths"] = paths;
                    rec["t_shift"] = shift;
                    rec["transition"] = trans;
                    rec["theta_eigenvalue"] = theta;
                    bool ok = paths && shift && trans && theta;
                    rec["pass"] = ok;
                    out.records.push_back(rec);
                    if (!ok) ++out.failures;
                }
            }
        }
    }
    return out;
}

// ---- lucas / p-adic suite ----------------------------------------------------

VerifySuiteResult run_lucas_suite(std::uint64_t seed) {
    VerifySuiteResult out;
    out.suite = "lucas";

    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        Rng rng(seed * 31 + p);
        // truncation oracle: binom(alpha, n) = binom(alpha_m, n) mod p once p^m > n
        {
            std::vector<json> failed;
            for (int trial = 0; trial < 500; ++trial) {
                std::int64_t num = rng.uniform(-50, 50);
                std::int64_t den = rng.uniform(1, 50);
                while (den % p == 0) den = rng.uniform(1, 50);
                PadicRational alpha = make_padic(num, den, p);
                std::int64_t n = rng.uniform(0, 200);
                int m = 1;
                std::int64_t pm = p;
                while (pm <= n) {
                    pm *= p;
                    ++m;
                }
                fp_t main = lucas_binomial(alpha, n);
                fp_t orc = oracle::bignum_binomial_mod(digits(alpha, m, p), n, p);
                if (main != orc)
                    failed.push_back(json{{"alpha", alpha.str()}, {"n", n}, {"p", p}});
            }
            push_summary(out, "lucas_vs_truncation_p" + std::to_string(p), 500, failed);
        }
        // digit round-trip through the canonical block
        {
            std::vector<json> failed;
            for (int trial = 0; trial < 500; ++trial) {
                std::int64_t num = rng.uniform(-50, 50);
                std::int64_t den = rng.uniform(1, 50);
                while (den % p == 0) den = rng.uniform(1, 50);
                PadicRational alpha = make_padic(num, den, p);
                DigitBlock block = digit_block(alpha, p);
                PadicRational back = from_periodic_digits(block);
                if (!(back == alpha))
                    failed.push_back(json{{"alpha", alpha.str()}, {"p", p}});
            }
            push_summary(out, "digit_round_trip_p" + std::to_string(p), 500, failed);
        }
        // Pascal rule binom(a,n) = binom(a-1,n) + binom(a-1,n-1)
        {
            std::vector<json> failed;
            for (int trial = 0; trial < 200; ++trial) {
                std::int64_t num = rng.uniform(-50, 50);
                std::int64_t den = rng.uniform(1, 50);
                while (den % p == 0) den = rng.uniform(1, 50);
                PadicRational alpha = make_padic(num, den, p);
                PadicRational alpha1 = make_padic(num - den, den, p);
                std::int64_t n = rng.uniform(1, 60);
                fp_t lhs = lucas_binomial(alpha, n);
                fp_t rhs = fp_add(lucas_binomial(alpha1, n), lucas_binomial(alpha1, n - 1), p);
                if (lhs != rhs)
                    failed.push_back(json{{"alpha", alpha.str()}, {"n", n}, {"p", p}});
            }
            push_summary(out, "pascal_rule_p" + std::to_string(p), 200, failed);
        }
        // T-map digit shift: digits(T(alpha), m, q) = (digits(alpha, m+1, q) - a_1)/q
        {
            std::vector<json> failed;
            for (int trial = 0; trial < 200; ++trial) {
                std::int64_t num = rng.uniform(-50, 50);
                std::int64_t den = rng.uniform(1, 50);
                while (den % p == 0) den = rng.uniform(1, 50);
                PadicRational alpha = make_padic(num, den, p);
                std::int64_t a1 = digits(alpha, 1, p);
                PadicRational t = T_map(alpha, p);
                bool ok = true;
                for (int m = 1; m <= 4; ++m) {
                    if (digits(t, m, p) != (digits(alpha, m + 1, p) - a1) / p) ok = false;
                }
                if (!ok) failed.push_back(json{{"alpha", alpha.str()}, {"p", p}});
            }
            push_summary(out, "t_map_shift_p" + std::to_string(p), 200, failed);
        }
    }

    // fixed points of T over q are exactly -a/(q-1), a in [0, q)
    {
        std::vector<json> failed;
        std::size_t checked = 0;
        for (std::int64_t q : {2, 3, 4, 7, 9}) {
            fp_t p = prime_of_power(q);
            for (std::int64_t a = 0; a < q; ++a) {
                PadicRational alpha = make_padic(-a, q - 1, p);
                ++checked;
                if (!(T_map(alpha, q) == alpha))
                    failed.push_back(json{{"q", q}, {"a", a}, {"expected", "fixed"}});
            }
            for (std::int64_t num = -30; num <= 30; ++num) {
                for (std::int64_t den = 1; den <= 30; ++den) {
                    if (den % p == 0) continue;
                    PadicRational alpha = make_padic(num, den, p);
                    bool is_form = false;
                    for (std::int64_t a = 0; a < q; ++a) {
                        if (alpha == make_padic(-a, q - 1, p)) is_form = true;
                    }
                    ++checked;
                    if ((T_map(alpha, q) == alpha) != is_form)
                        failed.push_back(json{{"q", q}, {"alpha", alpha.str()}});
                }
            }
        }
        push_summary(out, "t_map_fixed_points", checked, failed);
    }
    return out;
}

// ---- dside suite ---------------------------------------------------------------

VerifySuiteResult run_dside_suite(std::uint64_t seed) {
    VerifySuiteResult out;
    out.suite = "dside";
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto ring = make_ring(p, {"x", "y"});
        MonomialOrder order{};
        CartierStructure S = standard_cartier(ring);
        std::vector<Ideal> modules = {
            Ideal::unit(ring, order),
            Ideal(ring, {Polynomial::variable(ring, 0)}, order),
            Ideal(ring, {Polynomial::variable(ring, 0), Polynomial::variable(ring, 1)},
                  order)};
        std::vector<std::string> module_names = {"R", "(x)", "(x,y)"};
        Rng rng(seed * 7 + p);
        std::vector<Polynomial> corpus;
        for (int i = 0; i < 20; ++i) corpus.push_back(rng.polynomial(ring, 3, 5));

        struct Case {
            std::size_t fi, ni;
            int m;
        };
        std::vector<Case> cases;
        for (std::size_t fi = 0; fi < corpus.size(); ++fi)
            for (std::size_t ni = 0; ni < modules.size(); ++ni)
                for (int m = 1; m <= 2; ++m) cases.push_back({fi, ni, m});

        auto recs = parallel_map<json>(cases.size(), [&](std::size_t idx) {
            const Case& c = cases[idx];
            DsideReport rep = dside_bsr_check(S, modules[c.ni], corpus[c.fi], c.m);
            json rec = to_json(rep);
            rec["p"] = p;
            rec["f"] = corpus[c.fi].str();
            rec["module"] = module_names[c.ni];
            rec["pass"] = rep.agree;
            return rec;
        });
        for (auto& rec : recs) {
            if (!rec["pass"].get<bool>()) ++out.failures;
            out.records.push_back(std::move(rec));
        }
    }
    return out;
}

// ---- tau suite -------------------------------------------------------------------

VerifySuiteResult run_tau_suite(std::uint64_t seed) {
    VerifySuiteResult out;
    out.suite = "tau";
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        auto ring = make_ring(p, {"x", "y"});
        MonomialOrder order{};
        CartierStructure S = standard_cartier(ring);
        Ideal M = Ideal::unit(ring, order);
        Rng rng(seed * 13 + p);
        const std::int64_t q = p, q2 = q * q;

        for (int trial = 0; trial < 20; ++trial) {
            Polynomial f = rng.polynomial(ring, 3, 5);
            std::vector<json> failed;
            std::size_t checked = 0;

            std::vector<Ideal> tau(std::size_t(2 * q2) + 1);
            std::vector<int> witness(std::size_t(2 * q2) + 1, 0);
            for (std::int64_t n = 0; n <= 2 * q2; ++n) {
                TestIdealRecord rec = test_ideal(S, M, f, make_rat(n, q2));
                tau[std::size_t(n)] = rec.ideal;
                witness[std::size_t(n)] = rec.witness_level;
            }

            for (std::int64_t n = 0; n <= 2 * q2; ++n) {
                // basic_t(1): monotone
                if (n > 0) {
                    ++checked;
                    if (!ideal_contains(tau[std::size_t(n) - 1], tau[std::size_t(n)]))
                        failed.push_back(json{{"law", "monotone"}, {"n", n}, {"f", f.str()}});
                }
                // basic_t(2): tau(t+1) = f * tau(t)
                if (n + q2 <= 2 * q2) {
                    ++checked;
                    if (!ideal_equal(tau[std::size_t(n + q2)],
                                     ideal_scale(f, tau[std::size_t(n)])))
                        failed.push_back(json{{"law", "step"}, {"n", n}, {"f", f.str()}});
                }
                // basic_t(3): C(tau(q t)) = tau(t)
                if (n * q <= 2 * q2) {
                    ++checked;
                    if (!ideal_equal(cartier_image(S, tau[std::size_t(n * q)]),
                                     tau[std::size_t(n)]))
                        failed.push_back(json{{"law", "descent"}, {"n", n}, {"f", f.str()}});
                }
                // basic_t(4): tau(n/q^2) = C^2(f^n M), iterated path
                ++checked;
                Ideal direct = cartier_power_image(S, ideal_scale(f.pow(n), M), 2,
                                                   PowerPath::iterate);
                if (!ideal_equal(direct, tau[std::size_t(n)]))
                    failed.push_back(json{{"law", "level_formula"}, {"n", n}, {"f", f.str()}});
            }
            push_summary(out,
                         "tau_laws_p" + std::to_string(p) + "_f" + std::to_string(trial),
                         checked, failed);
        }
    }
    return out;
}

// ---- oracle suite -----------------------------------------------------------------

VerifySuiteResult run_oracle_suite(std::uint64_t seed) {
    VerifySuiteResult out;
    out.suite = "oracle";
    std::vector<oracle::OracleJob> jobs;

    // univariate closed-form nu
    for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
        for (int level = 1; level <= 2; ++level) {
            for (const char* f_text : {"x", "x^2", "x^3"}) {
                for (bool twist : {false, true}) {
                    oracle::OracleJob job;
                    job.command = "nu";
                    job.p = p;
                    job.level = level;
                    job.f_text = f_text;
                    if (twist)
                        job.twist_text = "x^" + std::to_string(p - 1);
                    jobs.push_back(job);
                    oracle::OracleJob job2 = job;
                    job2.module_texts = {"x^2"};
                    jobs.push_back(job2);
                }
            }
        }
    }
    // e = 2 univariate cases
    for (fp_t p : {fp_t(2), fp_t(3)}) {
        oracle::OracleJob job;
        job.command = "nu";
        job.p = p;
        job.e = 2;
        job.level = 1;
        job.f_text = "x^2";
        jobs.push_back(job);
    }
    // monomial-path nu and testideal
    {
        Rng rng(seed * 17);
        for (fp_t p : {fp_t(2), fp_t(3)}) {
            for (int trial = 0; trial < 6; ++trial) {
                oracle::OracleJob job;
                job.command = "nu";
                job.p = p;
                job.level = 1;
                std::int64_t a = rng.uniform(1, 3), b = rng.uniform(0, 2);
                job.f_text = "x^" + std::to_string(a) +
                             (b ? "y^" + std::to_string(b) : std::string());
                job.module_texts = {"x^" + std::to_string(rng.uniform(1, 2)), "y"};
                jobs.push_back(job);

                oracle::OracleJob tj;
                tj.command = "testideal";
                tj.p = p;
                tj.f_text = job.f_text;
                tj.module_texts = {"1"};
                std::int64_t den = p;
                std::int64_t num = rng.uniform(0, 2 * den);
                tj.t_text = std::to_string(num) + "/" + std::to_string(den);
                jobs.push_back(tj);
            }
            // named case: M = (x,y), f = xy, t = 1/2 at p = 2; the boundary
            // twist g = xy makes (x,y) F-pure, as tau requires
            if (p == 2) {
                oracle::OracleJob tj;
                tj.command = "testideal";
                tj.p = 2;
                tj.f_text = "xy";
                tj.twist_text = "xy";
                tj.module_texts = {"x", "y"};
                tj.t_text = "1/2";
                jobs.push_back(tj);
            }
        }
    }
    // lucas vs exact integers
    {
        Rng rng(seed * 19);
        for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
            for (int trial = 0; trial < 100; ++trial) {
                oracle::OracleJob job;
                job.command = "lucas";
                job.p = p;
                std::int64_t den = rng.uniform(1, 40);
                while (den % p == 0) den = rng.uniform(1, 40);
                job.alpha_text = std::to_string(rng.uniform(-40, 40)) + "/" +
                                 std::to_string(den);
                job.n = rng.uniform(0, 120);
                jobs.push_back(job);
            }
        }
        oracle::OracleJob named;
        named.command = "lucas";
        named.p = 7;
        named.alpha_text = "-5/6";
        named.n = 7;
        jobs.push_back(named);
    }
    // dense root extraction
    {
        Rng rng(seed * 23);
        for (fp_t p : {fp_t(2), fp_t(3), fp_t(5), fp_t(7)}) {
            auto ring = make_ring(p, {"x", "y"});
            for (int e = 1; e <= 2; ++e) {
                for (int trial = 0; trial < 10; ++trial) {
                    oracle::OracleJob job;
                    job.command = "rootdec";
                    job.p = p;
                    job.e = e;
                    job.f_text = rng.polynomial(ring, 8, 8).str();
                    jobs.push_back(job);
                }
            }
        }
    }

    auto recs = parallel_map<json>(jobs.size(), [&](std::size_t i) {
        oracle::OracleReport rep = oracle::oracle_compare(jobs[i]);
        json rec = to_json(rep);
        rec["pass"] = rep.agree;
        return rec;
    });
    for (auto& rec : recs) {
        if (!rec["pass"].get<bool>()) ++out.failures;
        out.records.push_back(std::move(rec));
    }
    return out;
}

} // namespace

std::vector<std::string> verify_suite_names() {
    return {"graph", "lucas", "dside", "tau", "oracle", "all"};
}

VerifySuiteResult verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "graph") return run_graph_suite(seed);
    if (name == "lucas") return run_lucas_suite(seed);
    if (name == "dside") return run_dside_suite(seed);
    if (name == "tau") return run_tau_suite(seed);
    if (name == "oracle") return run_oracle_suite(seed);
    if (name == "all") {
        VerifySuiteResult all;
        all.suite = "all";
        for (const auto& n : {"graph", "lucas", "dside", "tau", "oracle"}) {
            VerifySuiteResult r = verify_suite(n, seed);
            json rec{{"suite", r.suite},
                     {"checked", r.records.size()},
                     {"failures", r.failures},
                     {"pass", r.pass()}};
            all.records.push_back(rec);
            all.failures += r.failures;
        }
        return all;
    }
    raise(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

} // namespace fcart
