// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the hk binary: JSON output, determinism, exit codes.
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(HK_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double json_value(const std::string& text) {
    const auto pos = text.find("\"value\": ");
    if (pos == std::string::npos) return std::nan("");
    return std::stod(text.substr(pos + 9));
}

int failures = 0;
void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    {
        const RunResult r = run("eval psi --p 0 --omega 0.8");
        expect(r.exit_code == 0, "eval psi exit code");
        expect(std::abs(json_value(r.out) - 1.0) < 1e-12, "eval psi value");
        expect(r.out.find("\"converged\": true") != std::string::npos, "eval psi converged flag");
    }
    {
        const RunResult r = run("eval q1 --s 0 --sigma 1");
        expect(r.exit_code == 0, "eval q1 exit code");
        expect(json_value(r.out) == 0.0, "eval q1 value at s=0");
    }
    {
        // flat d=3 Green function is the Yukawa kernel e^{-mr}/(4 pi r)
        const RunResult r = run("eval green --d 3 --m2 1 --sigma 0.5");
        const double want = std::exp(-1.0) / (4.0 * M_PI);
        expect(std::abs(json_value(r.out) - want) < 1e-9, "eval green yukawa value");
    }
    {
        const RunResult r = run("eval psi --p 0.5 --omega 2 --provider constpot:0");
        expect(std::abs(json_value(r.out) - 1.7724538509055159) < 1e-12,
               "eval psi half-integer with constpot:0 provider");
    }
    {
        const RunResult bad_fn = run("eval nosuch --s 1");
        expect(bad_fn.exit_code == 2, "unknown function exits 2");
        const RunResult missing = run("eval q1 --s 1");
        expect(missing.exit_code == 2, "missing argument exits 2");
        const RunResult unknown_key = run("eval q1 --s 1 --sigma 1 --bogus 3");
        expect(unknown_key.exit_code == 2, "unknown key exits 2");
        const RunResult bad_suite = run("check nosuite");
        expect(bad_suite.exit_code == 2, "unknown suite exits 2");
    }
    {
        const RunResult r1 = run("check g19");
        const RunResult r2 = run("check g19");
        expect(r1.exit_code == 0, "check g19 passes");
        expect(!r1.out.empty() && r1.out == r2.out, "check g19 output is byte-identical");
        expect(r1.out.find("\"passed\": true") != std::string::npos, "check g19 report passed");
    }
    {
        // series-policy override via the environment
        const RunResult r = run("eval psi --p 0 --omega 6 --provider constpot:3");
        expect(r.out.find("\"converged\": true") != std::string::npos, "default policy converges");
        const std::string cmd = "HK_MAX_TERMS=4 " + std::string(HK_CLI_PATH) +
                                " eval psi --p 0 --omega 6 --provider constpot:3 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        std::string out;
        std::array<char, 512> buf{};
        while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
        pclose(pipe);
        expect(out.find("\"converged\": false") != std::string::npos,
               "HK_MAX_TERMS=4 flags non-convergence");
    }
    {
        const std::string p3 = "/tmp/hk_fig3.csv";
        const RunResult r = run("figure fig3 --out " + p3);
        expect(r.exit_code == 0, "figure fig3 exit code");
        const std::string a = slurp(p3);
        expect(a.find("Q_d5") != std::string::npos, "fig3 has five dimension columns");
        expect(a.find("nan") == std::string::npos, "fig3 contains no non-converged rows");
        std::remove(p3.c_str());
    }
    {
        const std::string p1 = "/tmp/hk_fig1_a.csv", p2 = "/tmp/hk_fig1_b.csv";
        const RunResult r1 = run("figure fig1 --out " + p1);
        const RunResult r2 = run("figure fig1 --out " + p2);
        expect(r1.exit_code == 0 && r2.exit_code == 0, "figure fig1 exit code");
        const std::string a = slurp(p1), b = slurp(p2);
        expect(!a.empty() && a == b, "figure fig1 deterministic");
        expect(a.rfind("#", 0) == 0, "figure header comment line");
        const auto line1 = a.find('\n');
        const auto line2 = a.find('\n', line1 + 1);
        const std::string first_row = a.substr(line2 + 1, a.find('\n', line2 + 1) - line2 - 1);
        expect(first_row == "0,0,0,0", "fig1 row s=0 is exactly zero");
        std::remove(p1.c_str());
        std::remove(p2.c_str());
    }

    if (failures == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cerr << failures << " cli test(s) failed\n";
    return 1;
}
