// Drives the fcart binary end to end: worked examples byte-exact, exit codes,
// determinism, and every console example in the README.
//
// usage: fcart_cli_tests <path-to-fcart> <path-to-README.md>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& binary, const std::string& args,
              const std::string& env = "") {
    std::string cmd = env + " " + binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++g_failures;
}

void check_eq(const std::string& got, const std::string& want, const std::string& what) {
    bool ok = got == want;
    check(ok, what);
    if (!ok) {
        std::cout << "  want: " << want << "\n  got:  " << got << "\n";
    }
}

std::string first_line(const std::string& s) {
    auto pos = s.find('\n');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: fcart_cli_tests <fcart-binary> <README.md>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const std::string readme_path = argv[2];

    // canonical CLI examples
    {
        RunResult r = run(binary, "nu -p 3 -e 1 -f \"x\" -m 2");
        check(r.exit_code == 0, "nu example exits 0");
        check(r.out.find("\"nu\":{\"level\":2,\"members\":[8],\"qm\":9}") != std::string::npos,
              "nu example reports members [8] at level 2");
    }
    {
        RunResult r = run(binary, "bsr -p 7 -f \"x^2+y^3\" --max-level 2");
        check(r.exit_code == 0, "bsr example exits 0");
        check(r.out.find("\"certified\":[\"-5/6\",\"-1\"]") != std::string::npos,
              "bsr example certifies [-5/6, -1]");
    }
    {
        RunResult r = run(binary, "nu -p 4 -f \"x\"");
        check(r.exit_code == 2, "nu with p=4 exits 2 (not prime)");
    }

    // exit codes: caps and usage
    {
        RunResult r = run(binary, "nu -p 2 -f \"x\" -m 25");
        check(r.exit_code == 3, "exponent cap exceeded exits 3");
        RunResult renv = run(binary, "nu -p 2 -f \"x\" -m 3", "FCART_EXP_CAP=4");
        check(renv.exit_code == 3, "FCART_EXP_CAP is honored");
        RunResult rgood = run(binary, "nu -p 2 -f \"x\" -m 3", "FCART_EXP_CAP=8");
        check(rgood.exit_code == 0, "FCART_EXP_CAP at the boundary still runs");
        // the M_{f!} chain for f = x^15 at p=2 needs four ascents
        RunResult riter = run(binary, "fjn -p 2 -f \"x^15\" -m 1", "FCART_ITER_CAP=2");
        check(riter.exit_code == 3, "FCART_ITER_CAP is honored");
        RunResult riter_ok = run(binary, "fjn -p 2 -f \"x^15\" -m 1", "FCART_ITER_CAP=10");
        check(riter_ok.exit_code == 0, "slow chain stabilizes within a larger budget");
    }
    {
        RunResult r = run(binary, "nu -p 5 -f \"x^(-1)\"");
        check(r.exit_code == 2, "negative exponent exits 2");
        RunResult r2 = run(binary, "nu -p 5 -f \"w\"");
        check(r2.exit_code == 2, "unknown variable exits 2");
        RunResult r3 = run(binary, "bogus");
        check(r3.exit_code == 2, "unknown subcommand exits 2");
    }
    {
        RunResult r = run(binary, "testideal -p 2 -f \"x\" -t \"1/3\"");
        check(r.exit_code == 2, "t with non-p-power denominator exits 2");
    }

    // byte determinism across runs
    {
        const std::string args = "bsr -p 7 -f \"x^2+y^3\" --max-level 2";
        RunResult a = run(binary, args);
        RunResult b = run(binary, args);
        check(!a.out.empty() && a.out == b.out, "bsr output is byte-deterministic");
    }
    {
        const std::string args = "verify --suite oracle";
        RunResult a = run(binary, args);
        RunResult b = run(binary, args);
        check(a.exit_code == 0, "verify --suite oracle passes");
        check(!a.out.empty() && a.out == b.out, "verify output is byte-deterministic");
    }

    // every console example in the README, byte-exact
    {
        std::ifstream in(readme_path);
        check(bool(in), "README.md is readable");
        std::string line;
        bool in_console = false;
        std::string pending_cmd;
        std::string expected;
        int example_no = 0;
        auto flush_example = [&]() {
            if (pending_cmd.empty()) return;
            ++example_no;
            RunResult r = run(binary, pending_cmd);
            check_eq(first_line(r.out), expected,
                     "README example " + std::to_string(example_no) + ": fcart " +
                         pending_cmd.substr(0, 40) + "...");
            pending_cmd.clear();
            expected.clear();
        };
        while (std::getline(in, line)) {
            if (line.rfind("```console", 0) == 0) {
                in_console = true;
                continue;
            }
            if (in_console && line.rfind("```", 0) == 0) {
                flush_example();
                in_console = false;
                continue;
            }
            if (!in_console) continue;
            if (line.rfind("$ fcart ", 0) == 0) {
                flush_example();
                pending_cmd = line.substr(8);
            } else if (!pending_cmd.empty() && expected.empty()) {
                expected = line;
            }
        }
        check(example_no >= 4, "README carries at least four executable examples");
    }

    std::cout << (g_failures == 0 ? "CLI TESTS PASSED\n" : "CLI TESTS FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
