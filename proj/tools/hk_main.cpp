// SPDX-License-Identifier: Apache-2.0
//
// hk -- figure data, verification suites, and point evaluation for the
// heat-kernel Hankel-transform function families.
//
//   hk figure fig1 --out fig1.csv
//   hk check all --format json
//   hk eval psi --p 0.5 --omega 2 --provider constpot:1.0
#include "hk/checks.hpp"
#include "hk/coeffs.hpp"
#include "hk/green.hpp"
#include "hk/hankel.hpp"
#include "hk/psiphi.hpp"
#include "hk/qfuncs.hpp"
#include "hk/series.hpp"
#include "hk/specfun.hpp"
#include "hk/transforms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

hk::CoefficientProvider parse_provider(const std::string& spec) {
    if (spec == "flat") return hk::CoefficientProvider::flat();
    if (spec.rfind("constpot:", 0) == 0)
        return hk::CoefficientProvider::constant_potential(std::stod(spec.substr(9)));
    if (spec.rfind("table:", 0) == 0)
        return hk::CoefficientProvider::from_json_file(spec.substr(6));
    throw CLI::ValidationError("--provider", "expected flat | constpot:v | table:PATH");
}

hk::SeriesPolicy env_policy() {
    hk::SeriesPolicy policy;
    if (const char* env = std::getenv("HK_MAX_TERMS")) {
        const int n = std::atoi(env);
        if (n >= 4) policy.max_terms = n;
    }
    return policy;
}

struct Output {
    std::optional<std::string> path;
    void write(const std::string& text) const {
        if (!path) {
            std::cout << text;
            return;
        }
        std::ofstream out(*path);
        if (!out) throw std::runtime_error("cannot open output path " + *path);
        out << text;
    }
};

// ----------------------------------------------------------- figures ----

int run_figure(const std::string& name, const Output& out) {
    std::string text;
    int warnings = 0;
    const auto safe = [&warnings](const std::function<double()>& f) {
        try {
            return f();
        } catch (const hk::no_convergence&) {
            ++warnings;
            return std::nan("");
        }
    };
    if (name == "fig1") {
        text = "# q-function profile: sigma=0.5, s in [0,40] step 0.1, series cap 500 terms\n";
        text += "s,Q1,Q2,Q1+Q2\n";
        for (int i = 0; i <= 400; ++i) {
            const double s = 0.1 * i;
            const double a = safe([&] { return hk::q1(s, 0.5); });
            const double b = safe([&] { return hk::q2(s, 0.5); });
            text += fmt(s) + "," + fmt(a) + "," + fmt(b) + "," + fmt(a + b) + "\n";
        }
    } else if (name == "fig2") {
        text = "# Q1+Q2 for sigma in {1, 0.5, 0.25}, s in [0,40] step 0.1, series cap 500 terms\n";
        text += "s,sum_sigma_1,sum_sigma_0.5,sum_sigma_0.25\n";
        for (int i = 0; i <= 400; ++i) {
            const double s = 0.1 * i;
            text += fmt(s);
            for (double sg : {1.0, 0.5, 0.25})
                text += "," + fmt(safe([&] { return hk::q1(s, sg) + hk::q2(s, sg); }));
            text += "\n";
        }
    } else if (name == "fig3") {
        text = "# Q(d,s,sigma): sigma=0.5, d in 1..5, s in [0,40] step 0.1, series cap 400 terms\n";
        text += "s,Q_d1,Q_d2,Q_d3,Q_d4,Q_d5\n";
        for (int i = 0; i <= 400; ++i) {
            const double s = 0.1 * i;
            text += fmt(s);
            for (int d = 1; d <= 5; ++d)
                text += "," + fmt(safe([&] { return hk::q_d(d, s, 0.5); }));
            text += "\n";
        }
    } else {
        std::cerr << "unknown figure name: " << name << "\n";
        return 2;
    }
    out.write(text);
    return warnings > 100 ? 100 : warnings;
}

// -------------------------------------------------------------- eval ----

struct Args {
    std::map<std::string, double> values;
    hk::CoefficientProvider provider = hk::CoefficientProvider::flat();

    double need(const std::string& key) const {
        const auto it = values.find(key);
        if (it == values.end())
            throw std::invalid_argument("missing required argument --" + key);
        return it->second;
    }
    int need_int(const std::string& key) const { return static_cast<int>(need(key)); }
};

struct EvalResult {
    double value = 0.0;
    int terms_used = 0;
    bool converged = true;
};

int run_eval(const std::string& function, Args& args, const Output& out) {
    const hk::SeriesPolicy policy = env_policy();
    EvalResult r;
    const auto from_series = [&r](const hk::SeriesValue& sv) {
        r.value = sv.value;
        r.terms_used = sv.terms_used;
        r.converged = sv.converged;
    };

    if (function == "psi") {
        from_series(hk::psi(args.provider, hk::FamilyIndex::of(args.need("p")),
                            args.need("omega"), policy));
    } else if (function == "phi") {
        from_series(hk::phi(args.provider, args.need_int("k"), args.need("omega"), policy));
    } else if (function == "omega") {
        from_series(hk::omega_series(args.provider, args.need_int("d"), args.need("omega"),
                                     args.need("tau"), policy));
    } else if (function == "kernel") {
        from_series(hk::heat_kernel_series(args.provider, args.need_int("d"), args.need("m2"),
                                           args.need("sigma"), args.need("tau"), policy));
    } else if (function == "q1") {
        r.value = hk::q1(args.need("s"), args.need("sigma"));
    } else if (function == "q2") {
        r.value = hk::q2(args.need("s"), args.need("sigma"));
    } else if (function == "qsum") {
        r.value = hk::q_sum_oracle(args.need("s"), args.need("sigma"));
    } else if (function == "qd") {
        const hk::QEvaluation q = hk::q_d_eval(args.need_int("d"), args.need("s"),
                                               args.need("sigma"));
        r.value = q.value;
        r.terms_used = q.terms_used;
    } else if (function == "t") {
        r.value = hk::t_appendix(args.need("omega"), args.need("s"));
    } else if (function == "fn") {
        r.value = hk::f_n(args.need_int("n"), args.need("s"), args.need("m2"));
    } else if (function == "gn") {
        r.value = hk::g_n_odd(args.need_int("n"), args.need("s"), args.need("m2"));
    } else if (function == "gneg") {
        r.value = hk::g_neg_n_even(args.need_int("n"), args.need("s"), args.need("m2"));
    } else if (function == "gpos") {
        r.value = hk::g_n_even(args.need_int("n"), args.need("s"), args.need("m2"));
    } else if (function == "green") {
        hk::GreenExpansion exp_;
        exp_.d = args.need_int("d");
        exp_.m2 = args.need("m2");
        exp_.provider = args.provider;
        exp_.policy = policy;
        r.value = hk::green(exp_, args.need("sigma"));
    } else if (function == "green-reg") {
        hk::GreenExpansion exp_;
        exp_.d = args.need_int("d");
        exp_.m2 = args.need("m2");
        exp_.provider = args.provider;
        exp_.policy = policy;
        r.value = hk::green_regularized(exp_, args.need("sigma"),
                                        hk::CutoffParameter{args.need("lambda")});
    } else if (function == "g19") {
        r.value = hk::verify_g19(args.need("lambda"), args.need("tau"));
    } else {
        std::cerr << "unknown function: " << function << "\n";
        return 2;
    }
    out.write("{\"value\": " + fmt(r.value) +
              ", \"terms_used\": " + std::to_string(r.terms_used) +
              ", \"converged\": " + (r.converged ? "true" : "false") + "}\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heat-kernel Hankel-transform function families"};
    app.require_subcommand(1);

    std::string out_path, format = "json", provider_spec = "flat";

    auto* fig = app.add_subcommand("figure", "write figure data as CSV");
    std::string fig_name;
    fig->add_option("name", fig_name, "fig1 | fig2 | fig3")->required();
    fig->add_option("--out", out_path, "output path (default: <name>.csv)");

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string suite;
    check->add_option("suite", suite, "g19|chains|theorem-odd|theorem-even|late-time|green|qfuncs|appendix|dimshift|all")
        ->required();
    check->add_option("--out", out_path, "write the JSON report here instead of stdout");
    check->add_option("--format", format, "csv|json (reports are always json)");

    auto* eval = app.add_subcommand("eval", "evaluate a registered function at a point");
    std::string function;
    eval->add_option("function", function, "psi|phi|omega|kernel|q1|q2|qsum|qd|t|fn|gn|gneg|gpos|green|green-reg|g19")
        ->required();
    eval->add_option("--out", out_path, "output path (default: stdout)");
    eval->add_option("--provider", provider_spec, "flat | constpot:v | table:PATH");
    eval->allow_extras(); // remaining --key value pairs are the function arguments

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    if (!out_path.empty()) out.path = out_path;

    try {
        if (fig->parsed()) {
            if (out_path.empty()) out.path = fig_name + ".csv";
            return run_figure(fig_name, out);
        }
        if (check->parsed()) {
            const auto reports = hk::run_check_suite(suite, env_policy());
            out.write(hk::check_reports_to_json(reports));
            for (const auto& r : reports)
                if (!r.passed) return 1;
            return 0;
        }
        if (eval->parsed()) {
            Args args;
            args.provider = parse_provider(provider_spec);
            std::vector<std::string> extras = eval->remaining();
            static const std::vector<std::string> known = {
                "p", "k", "n", "d", "omega", "sigma", "tau", "s", "m2", "lambda"};
            for (std::size_t i = 0; i < extras.size(); i += 2) {
                std::string key = extras[i];
                if (key.rfind("--", 0) != 0 || i + 1 >= extras.size()) {
                    std::cerr << "arguments must come as --key value pairs\n";
                    return 2;
                }
                key = key.substr(2);
                if (std::find(known.begin(), known.end(), key) == known.end()) {
                    std::cerr << "unknown argument key: --" << key << "\n";
                    return 2;
                }
                args.values[key] = std::stod(extras[i + 1]);
            }
            return run_eval(function, args, out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
