// SPDX-License-Identifier: Apache-2.0
#include "hk/checks.hpp"
#include "hk/coeffs.hpp"
#include "hk/fd.hpp"
#include "hk/green.hpp"
#include "hk/hankel.hpp"
#include "hk/psiphi.hpp"
#include "hk/qfuncs.hpp"
#include "hk/specfun.hpp"
#include "hk/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace hk {

double CheckReport::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

void CheckReport::finalize() { passed = max_residual() <= tolerance; }

namespace {

using Reports = std::vector<CheckReport>;

CoefficientProvider flat() { return CoefficientProvider::flat(); }

double rel(double got, double want, double scale = 0.0) {
    const double denom = std::max({std::abs(want), std::abs(scale), 1e-30});
    return std::abs(got - want) / denom;
}

// ---------------------------------------------------------------- g19 ----
Reports check_g19(const SeriesPolicy&) {
    CheckReport rep;
    rep.check_name = "g19";
    rep.tolerance = 1e-6;
    for (double lambda : {0.5, 1.0, 2.0, 5.0, 10.0})
        for (double tau : {0.05, 0.1, 0.3, 0.5, 1.0}) {
            rep.grid.push_back({lambda, tau});
            rep.residuals.push_back(verify_g19(lambda, tau));
        }
    rep.finalize();
    return {rep};
}

// -------------------------------------------------------------- chains ----
Reports check_chains(const SeriesPolicy& policy) {
    Reports out;
    const auto providers = {flat(), CoefficientProvider::constant_potential(1.0)};
    SeriesPolicy loose = policy;
    loose.max_terms = std::max(policy.max_terms, 80);

    { // -2 d_omega Psi_alpha = Psi_{alpha+1}
        CheckReport rep;
        rep.check_name = "psi-domega-chain";
        rep.tolerance = 1e-6;
        std::vector<int> twice_indices;
        for (int p = -4; p <= 3; ++p) twice_indices.push_back(2 * p);
        for (int t = -7; t <= 5; t += 2) twice_indices.push_back(t);
        int which = 0;
        for (const auto& prov : providers) {
            for (int t2 : twice_indices)
                for (double om : {0.3, 1.0, 3.0}) {
                    const FamilyIndex idx{t2};
                    const auto f = [&](double w) { return psi(prov, idx, w, loose).value; };
                    const double lhs = -2.0 * central_derivative(f, om, 1e-5 * om);
                    const double target = psi(prov, idx.succ(), om, loose).value;
                    rep.grid.push_back({static_cast<double>(which), 0.5 * t2, om});
                    rep.residuals.push_back(rel(lhs, target, f(om)));
                }
            ++which;
        }
        rep.finalize();
        out.push_back(std::move(rep));
    }

    { // A Psi_alpha^sigma = (d/2 - alpha - 1) Psi_{alpha+1}^sigma, sigma = r^2/2
        CheckReport rep;
        rep.check_name = "psi-laplacian-chain";
        rep.tolerance = 1e-5;
        std::vector<int> twice_indices;
        for (int p = -4; p <= 3; ++p) twice_indices.push_back(2 * p);
        for (int t = -7; t <= 5; t += 2) twice_indices.push_back(t);
        int which = 0;
        for (const auto& prov : providers) {
            const double v = prov.potential();
            for (int d = 1; d <= 5; ++d)
                for (int t2 : twice_indices)
                    for (double r : {0.8, 1.5}) {
                        const FamilyIndex idx{t2};
                        const auto f = [&](double rr) {
                            return psi(prov, idx, 0.5 * rr * rr, loose).value;
                        };
                        const double lap = radial_laplacian(f, r, d, 1e-3 * r);
                        const double lhs = -lap - v * f(r);
                        const double target = (0.5 * d - 0.5 * t2 - 1.0) *
                                              psi(prov, idx.succ(), 0.5 * r * r, loose).value;
                        rep.grid.push_back({static_cast<double>(which), static_cast<double>(d),
                                            0.5 * t2, r});
                        rep.residuals.push_back(rel(lhs, target, f(r)));
                    }
            ++which;
        }
        rep.finalize();
        out.push_back(std::move(rep));
    }

    { // -2 d_omega Phi_k = Phi_{k+1}
        CheckReport rep;
        rep.check_name = "phi-domega-chain";
        rep.tolerance = 1e-6;
        int which = 0;
        for (const auto& prov : providers) {
            for (int k = -4; k <= 3; ++k)
                for (double om : {0.3, 1.0, 3.0}) {
                    const auto f = [&](double w) { return phi(prov, k, w, loose).value; };
                    const double lhs = -2.0 * central_derivative(f, om, 1e-5 * om);
                    const double target = phi(prov, k + 1, om, loose).value;
                    rep.grid.push_back({static_cast<double>(which), static_cast<double>(k), om});
                    rep.residuals.push_back(rel(lhs, target, f(om)));
                }
            ++which;
        }
        rep.finalize();
        out.push_back(std::move(rep));
    }

    { // Phi ladder, flat d=2: A Phi_0 = -Psi_1 = 0 and A(Phi_{-1}+H_1 Psi_{-1}) = Phi_0
        CheckReport rep;
        rep.check_name = "phi-ladder-flat";
        rep.tolerance = 1e-7;
        const auto prov = flat();
        for (double r : {0.6, 1.0, 1.7}) {
            const auto f0 = [&](double rr) { return phi(prov, 0, 0.5 * rr * rr, loose).value; };
            rep.grid.push_back({0.0, r});
            rep.residuals.push_back(std::abs(-radial_laplacian(f0, r, 2, 1e-3 * r)));
            const auto fm1 = [&](double rr) {
                const double s2 = 0.5 * rr * rr;
                return phi(prov, -1, s2, loose).value +
                       psi(prov, FamilyIndex::integer(-1), s2, loose).value;
            };
            const double lhs = -radial_laplacian(fm1, r, 2, 1e-3 * r);
            const double target = phi(prov, 0, 0.5 * r * r, loose).value;
            rep.grid.push_back({1.0, r});
            rep.residuals.push_back(std::abs(lhs - target) / std::max(1.0, std::abs(target)));
        }
        rep.finalize();
        out.push_back(std::move(rep));
    }

    { // Phi ladder with potential, d=2: A Phi_0 = -Psi_1, A = -Lap - v
        CheckReport rep;
        rep.check_name = "phi-ladder-potential";
        rep.tolerance = 1e-5;
        const auto prov = CoefficientProvider::constant_potential(1.0);
        const double v = prov.potential();
        for (double r : {0.6, 1.0, 1.7}) {
            const auto f0 = [&](double rr) { return phi(prov, 0, 0.5 * rr * rr, loose).value; };
            const double lhs = -radial_laplacian(f0, r, 2, 1e-3 * r) - v * f0(r);
            const double target = -psi(prov, FamilyIndex::integer(1), 0.5 * r * r, loose).value;
            rep.grid.push_back({0.0, r});
            rep.residuals.push_back(rel(lhs, target, f0(r)));
            const auto fm1 = [&](double rr) {
                const double s2 = 0.5 * rr * rr;
                return phi(prov, -1, s2, loose).value +
                       psi(prov, FamilyIndex::integer(-1), s2, loose).value;
            };
            const double lhs2 = -radial_laplacian(fm1, r, 2, 1e-3 * r) - v * fm1(r);
            const double target2 = phi(prov, 0, 0.5 * r * r, loose).value;
            rep.grid.push_back({1.0, r});
            rep.residuals.push_back(rel(lhs2, target2, fm1(r)));
        }
        rep.finalize();
        out.push_back(std::move(rep));
    }

    { // even-d chain termination: flat A Psi_{d/2-1}^sigma = 0
        CheckReport rep;
        rep.check_name = "even-termination";
        rep.tolerance = 1e-8;
        for (int d : {2, 4})
            for (double r : {0.5, 1.0, 1.5, 2.0}) {
                const auto f = [&](double rr) {
                    return psi(flat(), FamilyIndex::integer(d / 2 - 1), 0.5 * rr * rr, loose).value;
                };
                rep.grid.push_back({static_cast<double>(d), r});
                rep.residuals.push_back(std::abs(-radial_laplacian(f, r, d, 1e-3 * r)));
            }
        rep.finalize();
        out.push_back(std::move(rep));
    }

    { // odd-d fundamental solution, flat d=3: Psi_{1/2}/(4pi)^{3/2} = 1/(4 pi r)
        CheckReport value_rep, lap_rep;
        value_rep.check_name = "lemma5-value";
        value_rep.tolerance = 1e-13;
        lap_rep.check_name = "lemma5-laplacian";
        lap_rep.tolerance = 1e-8;
        const double norm = std::pow(4.0 * M_PI, 1.5);
        for (double r : {0.5, 1.0, 1.5, 2.0}) {
            const auto f = [&](double rr) {
                return psi(flat(), FamilyIndex::half_integer(1), 0.5 * rr * rr, loose).value / norm;
            };
            value_rep.grid.push_back({r});
            value_rep.residuals.push_back(rel(f(r), 1.0 / (4.0 * M_PI * r)));
            lap_rep.grid.push_back({r});
            lap_rep.residuals.push_back(std::abs(-radial_laplacian(f, r, 3, 1e-3 * r)));
        }
        value_rep.finalize();
        lap_rep.finalize();
        out.push_back(std::move(value_rep));
        out.push_back(std::move(lap_rep));
    }
    return out;
}

// ------------------------------------------------------- theorem suites ----
Reports check_theorem_odd(const SeriesPolicy& policy) {
    SeriesPolicy loose = policy;
    loose.max_terms = std::max(policy.max_terms, 120);
    CheckReport rep;
    rep.check_name = "theorem-odd";
    rep.tolerance = 1e-5;
    struct Point {
        CoefficientProvider prov;
        int d;
        double m2, tau, omega;
    };
    const Point points[] = {
        {flat(), 1, 1.0, 0.1, 0.2},
        {flat(), 3, 1.0, 0.1, 0.5},
        {CoefficientProvider::constant_potential(0.5), 1, 2.0, 0.05, 0.3},
    };
    for (const auto& pt : points) {
        rep.grid.push_back({static_cast<double>(pt.d), pt.m2, pt.tau, pt.omega,
                            pt.prov.potential()});
        rep.residuals.push_back(
            verify_theorem_odd(pt.prov, pt.d, pt.m2, pt.tau, pt.omega, rep.tolerance, loose));
    }
    rep.finalize();
    return {rep};
}

Reports check_theorem_even(const SeriesPolicy& policy) {
    SeriesPolicy loose = policy;
    loose.max_terms = std::max(policy.max_terms, 120);
    CheckReport flat_rep, pot_rep, add_rep;
    flat_rep.check_name = "theorem-even-flat";
    flat_rep.tolerance = 1e-5;
    pot_rep.check_name = "theorem-even-potential";
    pot_rep.tolerance = 1e-4;
    add_rep.check_name = "theorem-even-additivity";
    add_rep.tolerance = 1e-12;

    for (int d : {2, 4}) {
        const auto res = verify_theorem_even(flat(), d, 1.0, 0.1, 0.3, flat_rep.tolerance, loose);
        flat_rep.grid.push_back({static_cast<double>(d), 1.0, 0.1, 0.3, 0.0});
        flat_rep.residuals.push_back(res.theorem3);
        flat_rep.grid.push_back({static_cast<double>(d), 1.0, 0.1, 0.3, 1.0});
        flat_rep.residuals.push_back(res.theorem5);
        add_rep.grid.push_back({static_cast<double>(d)});
        add_rep.residuals.push_back(res.additivity);
    }
    {
        const auto prov = CoefficientProvider::constant_potential(0.4);
        const auto res = verify_theorem_even(prov, 2, 1.5, 0.05, 0.2, pot_rep.tolerance, loose);
        pot_rep.grid.push_back({2.0, 1.5, 0.05, 0.2, 0.0});
        pot_rep.residuals.push_back(res.theorem3);
        pot_rep.grid.push_back({2.0, 1.5, 0.05, 0.2, 1.0});
        pot_rep.residuals.push_back(res.theorem5);
        pot_rep.grid.push_back({2.0, 1.5, 0.05, 0.2, 2.0});
        pot_rep.residuals.push_back(res.theorem4_omega);
        add_rep.grid.push_back({2.0});
        add_rep.residuals.push_back(res.additivity);
    }
    flat_rep.finalize();
    pot_rep.finalize();
    add_rep.finalize();
    return {flat_rep, pot_rep, add_rep};
}

// ----------------------------------------------------------- late-time ----
Reports check_late_time(const SeriesPolicy& policy) {
    CheckReport rep;
    rep.check_name = "late-time";
    rep.tolerance = 1e-10;
    const auto table = CoefficientProvider::table({1.0, 0.5, 0.1});
    struct Row {
        CoefficientProvider prov;
        int d, n_check;
        double omega;
    };
    const Row rows[] = {
        {flat(), 2, 5, 1.0},
        {table, 2, 4, 0.7},
        {flat(), 4, 5, 1.0},
        {table, 4, 4, 0.7},
    };
    for (const auto& r : rows) {
        rep.grid.push_back({static_cast<double>(r.d), r.omega, static_cast<double>(r.n_check)});
        rep.residuals.push_back(verify_late_time_split(r.prov, r.d, r.omega, r.n_check, policy));
    }
    rep.finalize();
    return {rep};
}

// --------------------------------------------------------------- green ----
Reports check_green(const SeriesPolicy& policy) {
    Reports out;
    CheckReport rep;
    rep.check_name = "green-closed-forms";
    rep.tolerance = 1e-8;
    const auto closed = [](int d, double m, double r) {
        if (d == 1) return std::exp(-m * r) / (2.0 * m);
        if (d == 2) return bessel_k0(m * r) / (2.0 * M_PI);
        return std::exp(-m * r) / (4.0 * M_PI * r);
    };
    for (int d : {1, 2, 3})
        for (double m2 : {1.0, 2.25})
            for (double r : {0.2, 0.6, 1.0, 1.4, 2.0}) {
                const double m = std::sqrt(m2);
                if (m * r < 0.2 || m * r > 2.0) continue;
                GreenExpansion exp_{d, m2, flat(), 60, policy};
                rep.grid.push_back({static_cast<double>(d), m2, r});
                rep.residuals.push_back(rel(green(exp_, 0.5 * r * r), closed(d, m, r)));
            }
    rep.finalize();
    out.push_back(std::move(rep));

    CheckReport shift;
    shift.check_name = "green-potential-shift";
    shift.tolerance = 1e-8;
    for (int d : {2, 3})
        for (double r : {0.5, 1.0, 2.0}) {
            GreenExpansion cp{d, 1.5, CoefficientProvider::constant_potential(0.5), 60, policy};
            GreenExpansion fl{d, 1.0, flat(), 60, policy};
            shift.grid.push_back({static_cast<double>(d), r});
            shift.residuals.push_back(rel(green(cp, 0.5 * r * r), green(fl, 0.5 * r * r)));
        }
    shift.finalize();
    out.push_back(std::move(shift));
    return out;
}

// -------------------------------------------------------------- qfuncs ----
Reports check_qfuncs(const SeriesPolicy&) {
    Reports out;

    {
        CheckReport rep;
        rep.check_name = "qsum-identity";
        rep.tolerance = 1e-6;
        for (double s : {0.5, 1.0, 2.0, 5.0, 10.0})
            for (double sg : {0.25, 0.5, 1.0}) {
                rep.grid.push_back({s, sg});
                rep.residuals.push_back(std::abs(q_sum_oracle(s, sg) - (q1(s, sg) + q2(s, sg))));
            }
        rep.finalize();
        out.push_back(std::move(rep));
    }
    {
        CheckReport rep;
        rep.check_name = "qd1-reduction";
        rep.tolerance = 1e-12;
        for (double s : {0.5, 2.0, 7.0, 20.0})
            for (double sg : {0.25, 1.0}) {
                rep.grid.push_back({s, sg});
                rep.residuals.push_back(rel(q_d(1, s, sg), q1(s, sg) + q2(s, sg), 1.0));
            }
        rep.finalize();
        out.push_back(std::move(rep));
    }
    {
        CheckReport rep;
        rep.check_name = "qd-odd-derivative";
        rep.tolerance = 1e-4;
        for (int d : {3, 5})
            for (double s : {1.0, 3.0})
                for (double sg : {0.4, 0.7}) {
                    const auto f = [s](double x) { return q1(s, x) + q2(s, x); };
                    double oracle;
                    if (d == 3) {
                        const double h = 1e-4 * sg;
                        oracle = (-1.0 / (2.0 * M_PI)) * central_derivative(f, sg, h);
                    } else {
                        const double h = 1e-3 * sg;
                        const double d2 =
                            (16.0 * ((f(sg + 0.5 * h) - 2.0 * f(sg) + f(sg - 0.5 * h)) /
                                     (0.25 * h * h)) -
                             (f(sg + h) - 2.0 * f(sg) + f(sg - h)) / (h * h)) / 15.0;
                        oracle = d2 / std::pow(2.0 * M_PI, 2);
                    }
                    rep.grid.push_back({static_cast<double>(d), s, sg});
                    rep.residuals.push_back(rel(q_d(d, s, sg), oracle));
                }
        rep.finalize();
        out.push_back(std::move(rep));
    }
    {
        CheckReport rep;
        rep.check_name = "qd2-massless-assembly";
        rep.tolerance = 1e-8;
        for (double s : {0.5, 1.0, 3.0, 8.0})
            for (double sg : {0.5, 1.0}) {
                rep.grid.push_back({s, sg});
                rep.residuals.push_back(std::abs(q_d(2, s, sg) - massless_even_assembly(s, sg)));
            }
        rep.finalize();
        out.push_back(std::move(rep));
    }
    {
        // figure morphology; residuals are violation magnitudes (0 = satisfied)
        CheckReport rep;
        rep.check_name = "figure-morphology";
        rep.tolerance = 0.0;
        // Q1 strictly increasing for s >= 10 at sigma = 1/2
        int decreases = 0;
        double prev = q1(10.0, 0.5);
        for (int i = 101; i <= 400; ++i) {
            const double cur = q1(0.1 * i, 0.5);
            if (cur <= prev) ++decreases;
            prev = cur;
        }
        rep.grid.push_back({1.0, 0.5});
        rep.residuals.push_back(static_cast<double>(decreases));
        // each Q1+Q2 column: >= 3 sign changes on (0, 40) and decay by s = 40
        for (double sg : {1.0, 0.5, 0.25}) {
            int changes = 0;
            double last = q1(0.1, sg) + q2(0.1, sg), peak = std::abs(last);
            for (int i = 2; i <= 400; ++i) {
                const double cur = q1(0.1 * i, sg) + q2(0.1 * i, sg);
                if (cur * last < 0.0) ++changes;
                peak = std::max(peak, std::abs(cur));
                last = cur;
            }
            rep.grid.push_back({2.0, sg});
            rep.residuals.push_back(std::max(0.0, 3.0 - changes));
            rep.grid.push_back({3.0, sg});
            rep.residuals.push_back(std::max(0.0, std::abs(last) / peak - 0.05));
        }
        rep.finalize();
        out.push_back(std::move(rep));
    }
    return out;
}

// ------------------------------------------------------------ appendix ----
Reports check_appendix(const SeriesPolicy&) {
    CheckReport integral, ode;
    integral.check_name = "appendix-integral";
    integral.tolerance = 1e-6;
    ode.check_name = "appendix-ode";
    ode.tolerance = 1e-10;
    for (double om : {0.5, 1.0, 2.0})
        for (double s : {0.5, 1.0, 2.0}) {
            integral.grid.push_back({om, s});
            integral.residuals.push_back(std::abs(t_appendix(om, s) - t_integral_oracle(om, s)));
            ode.grid.push_back({om, s});
            ode.residuals.push_back(t_ode_residual(om, s));
        }
    integral.finalize();
    ode.finalize();
    return {integral, ode};
}

// ------------------------------------------------------------ dimshift ----
Reports check_dimshift(const SeriesPolicy&) {
    CheckReport rep;
    rep.check_name = "dimension-shift";
    rep.tolerance = 1e-7;
    const double rows[][4] = {{1, 2, 1.0, 0.5}, {2, 1, 1.0, 0.5}, {3, 2, 2.0, 0.25}};
    for (const auto& r : rows) {
        rep.grid.push_back({r[0], r[1], r[2], r[3]});
        rep.residuals.push_back(dimension_shift_check(static_cast<int>(r[0]),
                                                      static_cast<int>(r[1]), r[2], r[3]));
    }
    rep.finalize();
    return {rep};
}

} // namespace

std::vector<std::string> check_suite_names() {
    return {"g19",   "chains", "theorem-odd", "theorem-even", "late-time",
            "green", "qfuncs", "appendix",    "dimshift",     "all"};
}

std::vector<CheckReport> run_check_suite(const std::string& suite, const SeriesPolicy& policy) {
    if (suite == "g19") return check_g19(policy);
    if (suite == "chains") return check_chains(policy);
    if (suite == "theorem-odd") return check_theorem_odd(policy);
    if (suite == "theorem-even") return check_theorem_even(policy);
    if (suite == "late-time") return check_late_time(policy);
    if (suite == "green") return check_green(policy);
    if (suite == "qfuncs") return check_qfuncs(policy);
    if (suite == "appendix") return check_appendix(policy);
    if (suite == "dimshift") return check_dimshift(policy);
    if (suite == "all") {
        Reports all;
        for (const auto& name : check_suite_names()) {
            if (name == "all") continue;
            Reports part = run_check_suite(name, policy);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown check suite: " + suite);
}

std::string check_reports_to_json(const std::vector<CheckReport>& reports) {
    // fixed 17-significant-digit formatting keeps byte-identical reruns
    const auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string s = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) s += ",";
        s += "\n  {\"check_name\": \"" + r.check_name + "\", \"grid\": [";
        for (std::size_t g = 0; g < r.grid.size(); ++g) {
            if (g) s += ", ";
            s += "[";
            for (std::size_t j = 0; j < r.grid[g].size(); ++j) {
                if (j) s += ", ";
                s += num(r.grid[g][j]);
            }
            s += "]";
        }
        s += "], \"residuals\": [";
        for (std::size_t g = 0; g < r.residuals.size(); ++g) {
            if (g) s += ", ";
            s += num(r.residuals[g]);
        }
        s += "], \"tolerance\": " + num(r.tolerance);
        s += ", \"max_residual\": " + num(r.max_residual());
        s += std::string(", \"passed\": ") + (r.passed ? "true" : "false") + "}";
    }
    s += "\n]\n";
    return s;
}

} // namespace hk
