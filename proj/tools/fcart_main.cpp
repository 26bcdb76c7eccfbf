// fcart: invariants of twisted q-Cartier structures on F_p[x_1..x_n] --
// nu-invariant sets and trees, p-adic Bernstein-Sato roots with periodicity
// certificates, test ideals, F-jumping exponents, and verification suites.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "fcart/caps.hpp"
#include "fcart/error.hpp"
#include "fcart/parse.hpp"
#include "fcart/report.hpp"
#include "fcart/verify.hpp"

namespace {

using namespace fcart;

constexpr const char* kGrammar =
    "polynomial grammar: expr := ('+'|'-')? term (('+'|'-') term)*;\n"
    "  term := coeff? ('*'? factor)*; factor := var ('^' uint)?; coeff := uint;\n"
    "  whitespace insignificant, no parentheses.";

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct CommonArgs {
    std::uint64_t p = 0;
    int e = 1;
    std::string f_text;
    std::string twist_text = "1";
    std::vector<std::string> module_texts;
    std::string vars_csv = "x,y,z";
    std::string order_name = "grevlex";
    bool text_output = false;
};

struct ParsedJob {
    RingPtr ring;
    MonomialOrder order;
    CartierStructure S;
    Polynomial f;
    Ideal N;
};

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

ParsedJob build_job(const CommonArgs& args, bool need_f = true) {
    ParsedJob job;
    job.ring = make_ring(args.p, split_csv(args.vars_csv));
    if (args.order_name == "grevlex")
        job.order = MonomialOrder{OrderKind::grevlex};
    else if (args.order_name == "lex")
        job.order = MonomialOrder{OrderKind::lex};
    else
        raise(ErrorKind::InvalidArgument, "order must be grevlex or lex");
    Polynomial twist = parse_polynomial(args.twist_text, job.ring);
    job.S = make_cartier(job.ring, args.e, twist);
    if (need_f) {
        job.f = parse_polynomial(args.f_text, job.ring);
        if (job.f.is_zero()) raise(ErrorKind::ZeroDivisorInput, "f must be nonzero");
    }
    std::vector<Polynomial> gens;
    for (const auto& text :
         args.module_texts.empty() ? std::vector<std::string>{"1"} : args.module_texts)
        gens.push_back(parse_polynomial(text, job.ring));
    job.N = Ideal(job.ring, std::move(gens), job.order);
    return job;
}

json envelope(const std::string& command, const CommonArgs& args) {
    json j{{"schema", "fcart/1"},
           {"command", command},
           {"p", args.p},
           {"e", args.e},
           {"vars", split_csv(args.vars_csv)},
           {"order", args.order_name},
           {"twist", args.twist_text},
           {"module", args.module_texts.empty() ? std::vector<std::string>{"1"}
                                                : args.module_texts}};
    if (!args.f_text.empty()) j["f"] = args.f_text;
    return j;
}

void emit(const json& j, bool text_output) {
    if (!text_output) {
        std::cout << j.dump() << "\n";
        return;
    }
    // human-readable summaries; the JSON form is the stable interface
    const std::string cmd = j.value("command", "");
    if (cmd == "nu") {
        const auto& nu = j["nu"];
        std::cout << "nu level " << nu["level"] << " (q^m = " << nu["qm"]
                  << "): members " << nu["members"].dump() << "\n";
    } else if (cmd == "bsr") {
        const auto& bsr = j["bsr"];
        std::cout << "certified roots: " << bsr["certified"].dump() << "\n";
        for (const auto& c : bsr["certificates"]) {
            std::cout << "  branch digits " << c["digits"].dump() << ": ";
            if (c["status"] == "certified_rational")
                std::cout << "certified " << c["value"].get<std::string>() << " (period "
                          << c["period"] << ")";
            else
                std::cout << (c["dead_end"].get<bool>() ? "dead end" : "uncertified prefix");
            std::cout << "\n";
        }
    } else if (cmd == "testideal") {
        const auto& ti = j["testideal"];
        std::cout << "tau(M, f^" << ti["t"].get<std::string>() << ") = "
                  << ti["ideal"].dump() << " [witness level " << ti["witness_level"]
                  << "]\n";
    } else if (cmd == "fjn") {
        const auto& fjn = j["fjn"];
        std::cout << "F-jumping exponents at level " << fjn["level"] << ":\n";
        for (const auto& e : fjn["exponents"])
            std::cout << "  t = " << e["t"].get<std::string>() << " ("
                      << e["side"].get<std::string>()
                      << (e["certified"].get<bool>() ? ", certified" : "") << ")\n";
        for (const auto& iv : fjn["unresolved"])
            std::cout << "  unresolved in (" << iv["lo"].get<std::string>() << ", "
                      << iv["hi"].get<std::string>() << "]\n";
    } else if (cmd == "probe") {
        const auto& pr = j["probe"];
        std::cout << "nu cardinalities per level: " << pr["counts"].dump() << ", max "
                  << pr["max"] << (pr["level_stable"].get<bool>() ? " (level-stable)" : "")
                  << "\n";
    } else if (cmd == "verify") {
        std::cout << "suite " << j["suite"].get<std::string>() << ": "
                  << (j["pass"].get<bool>() ? "PASS" : "FAIL") << " ("
                  << j["records"].size() << " records, " << j["failures"]
                  << " failures)\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

int exit_code_for(const Error& err) {
    switch (err.kind()) {
        case ErrorKind::ExponentCapExceeded:
        case ErrorKind::IterationCapExceeded:
        case ErrorKind::PairCapExceeded:
            return kExitResourceCap;
        case ErrorKind::InternalMismatch:
            return kExitMathFailure;
        default:
            return kExitUsage;
    }
}

void print_error(const Error& err) {
    std::cerr << "error[" << error_kind_name(err.kind()) << "]: " << err.what();
    if (err.byte_offset() >= 0) std::cerr << " (byte " << err.byte_offset() << ")";
    std::cerr << "\n";
    switch (err.kind()) {
        case ErrorKind::SyntaxError:
        case ErrorKind::UnknownVariable:
        case ErrorKind::NegativeExponent:
            std::cerr << kGrammar << "\n";
            break;
        default:
            break;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of twisted q-Cartier module structures over F_p"};
    app.require_subcommand(1);

    CommonArgs args;
    int level = 1;
    int max_level = 2;
    std::string t_text = "0";
    std::string suite = "all";
    std::int64_t exp_cap = 0;
    int iter_cap = 0;

    auto add_common = [&](CLI::App* cmd, bool with_f) {
        cmd->add_option("-p,--prime", args.p, "characteristic (prime)")->required();
        cmd->add_option("-e,--level-e", args.e, "Frobenius level e, q = p^e");
        if (with_f) cmd->add_option("-f,--poly", args.f_text, "polynomial f")->required();
        cmd->add_option("--twist", args.twist_text, "twist polynomial g");
        cmd->add_option("--module", args.module_texts,
                        "generator of the module N (repeatable; default 1 = R)");
        cmd->add_option("--vars", args.vars_csv, "comma-separated variable names");
        cmd->add_option("--order", args.order_name, "monomial order: grevlex | lex");
        cmd->add_flag("--text", args.text_output, "pretty-printed output");
        cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
        cmd->add_option("--exp-cap", exp_cap, "override q^m budget (FCART_EXP_CAP)");
        cmd->add_option("--iter-cap", iter_cap, "override iteration budget (FCART_ITER_CAP)");
    };

    CLI::App* nu_cmd = app.add_subcommand("nu", "nu-invariant set at one level");
    add_common(nu_cmd, true);
    nu_cmd->add_option("-m,--level", level, "level m (q^m scan)");

    CLI::App* bsr_cmd = app.add_subcommand("bsr", "Bernstein-Sato roots via the nu-tree");
    add_common(bsr_cmd, true);
    bsr_cmd->add_option("--max-level", max_level, "deepest nu level");

    CLI::App* ti_cmd = app.add_subcommand("testideal", "test ideal tau(M, f^t)");
    add_common(ti_cmd, true);
    ti_cmd->add_option("-t,--exponent", t_text, "t as 'n/q^m' literal")->required();

    CLI::App* fjn_cmd = app.add_subcommand("fjn", "F-jumping exponents in (0, 1]");
    add_common(fjn_cmd, true);
    fjn_cmd->add_option("-m,--level", level, "grid resolution level");

    CLI::App* probe_cmd = app.add_subcommand("probe", "boundedness probe for nu counts");
    add_common(probe_cmd, true);
    probe_cmd->add_option("--max-level", max_level, "deepest nu level");

    CLI::App* verify_cmd = app.add_subcommand("verify", "identity suites");
    verify_cmd->add_option("--suite", suite, "graph | lucas | dside | tau | oracle | all");
    bool verify_text = false;
    verify_cmd->add_flag("--text", verify_text, "pretty-printed output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n" << kGrammar << "\n";
        return kExitUsage;
    }

    try {
        if (exp_cap > 0) global_caps().exp_cap = exp_cap;
        if (iter_cap > 0) global_caps().iter_cap = iter_cap;

        if (app.got_subcommand(verify_cmd)) {
            VerifySuiteResult result = verify_suite(suite);
            json j{{"schema", "fcart/1"},
                   {"command", "verify"},
                   {"suite", result.suite},
                   {"pass", result.pass()},
                   {"failures", result.failures},
                   {"records", result.records}};
            emit(j, verify_text);
            return result.pass() ? kExitOk : kExitMathFailure;
        }

        if (app.got_subcommand(nu_cmd)) {
            ParsedJob job = build_job(args);
            NuLevelSet s = nu_set(job.S, job.N, job.f, level);
            json j = envelope("nu", args);
            j["nu"] = to_json(s);
            emit(j, args.text_output);
            return kExitOk;
        }
        if (app.got_subcommand(bsr_cmd)) {
            ParsedJob job = build_job(args);
            NuTree tree = nu_tree(job.S, job.N, job.f, max_level);
            auto certs = bsr_roots(tree, is_f_pure(job.S, job.N));
            json jcerts = json::array();
            for (const auto& c : certs) jcerts.push_back(to_json(c));
            json roots = json::array();
            for (const auto& v : certified_values(certs)) roots.push_back(v.str());
            json j = envelope("bsr", args);
            j["bsr"] = json{{"max_level", max_level},
                            {"certified", roots},
                            {"certificates", jcerts},
                            {"tree", to_json(tree)}};
            emit(j, args.text_output);
            return kExitOk;
        }
        if (app.got_subcommand(ti_cmd)) {
            ParsedJob job = build_job(args);
            Rat64 t{};
            auto slash = t_text.find('/');
            if (slash == std::string::npos)
                t = make_rat(std::stoll(t_text), 1);
            else
                t = make_rat(std::stoll(t_text.substr(0, slash)),
                             std::stoll(t_text.substr(slash + 1)));
            TestIdealRecord rec = test_ideal(job.S, job.N, job.f, t);
            json j = envelope("testideal", args);
            j["testideal"] = to_json(rec);
            emit(j, args.text_output);
            return kExitOk;
        }
        if (app.got_subcommand(fjn_cmd)) {
            ParsedJob job = build_job(args);
            FjnReport rep = fjn_exponents(job.S, job.N, job.f, level);
            json j = envelope("fjn", args);
            j["fjn"] = to_json(rep);
            emit(j, args.text_output);
            return kExitOk;
        }
        if (app.got_subcommand(probe_cmd)) {
            ParsedJob job = build_job(args);
            ProbeReport rep = bound_assumption_probe(job.S, job.N, job.f, max_level);
            json j = envelope("probe", args);
            j["probe"] = to_json(rep);
            emit(j, args.text_output);
            return kExitOk;
        }
    } catch (const Error& err) {
        print_error(err);
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
