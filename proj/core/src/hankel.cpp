// SPDX-License-Identifier: Apache-2.0
#include "hk/hankel.hpp"
#include "hk/series.hpp"
#include "hk/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hk {

void HankelPolicy::validate() const {
    if (max_panels < 8) throw std::invalid_argument("HankelPolicy: max_panels must be >= 8");
    if (!(panel_rtol > 0)) throw std::invalid_argument("HankelPolicy: panel_rtol must be > 0");
    if (min_subdivisions < 0 || min_subdivisions > 6)
        throw std::invalid_argument("HankelPolicy: min_subdivisions out of range");
}

namespace {

std::vector<double>& j1_zero_cache() {
    static std::vector<double> zeros;
    return zeros;
}
std::mutex j1_zero_mutex;

void extend_j1_zeros(int count) {
    auto& zeros = j1_zero_cache();
    while (static_cast<int>(zeros.size()) < count) {
        const int k = static_cast<int>(zeros.size()) + 1;
        // McMahon expansion seed, then Newton with J1' = J0 - J1/x
        const double beta = (k + 0.25) * M_PI;
        double x = beta - 3.0 / (8.0 * beta) - 36.0 / (3.0 * 512.0 * beta * beta * beta);
        for (int it = 0; it < 30; ++it) {
            const double f = bessel_j1(x);
            const double df = bessel_j0(x) - f / x;
            const double dx = f / df;
            x -= dx;
            if (std::abs(dx) < 1e-15 * x) break;
        }
        zeros.push_back(x);
    }
}

} // namespace

double bessel_j1_zero(int k) {
    if (k < 1) throw std::domain_error("bessel_j1_zero: k >= 1");
    std::lock_guard<std::mutex> lock(j1_zero_mutex);
    extend_j1_zeros(k);
    return j1_zero_cache()[static_cast<std::size_t>(k - 1)];
}

namespace detail {

namespace {

constexpr double gl16_x[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                              0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
constexpr double gl16_w[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                              0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};

// The eval budget and depth cap keep cancellation noise in f from blowing the
// refinement into a full tree; boundary layers still refine deep along a
// single path in the early panels where they can occur.
double adaptive_gl(const std::function<double(double)>& f, double a, double b, double tol,
                   int depth, int force_depth, int max_depth, long& budget) {
    const double whole = gauss16(f, a, b);
    const double mid = 0.5 * (a + b);
    const double two = gauss16(f, a, mid) + gauss16(f, mid, b);
    budget -= 48;
    if (depth >= force_depth &&
        (std::abs(two - whole) <= tol || depth >= max_depth || budget <= 0))
        return two;
    return adaptive_gl(f, a, mid, 0.5 * tol, depth + 1, force_depth, max_depth, budget) +
           adaptive_gl(f, mid, b, 0.5 * tol, depth + 1, force_depth, max_depth, budget);
}

} // namespace

double gauss16(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i)
        s += gl16_w[i] * (f(mid + half * gl16_x[i]) + f(mid - half * gl16_x[i]));
    return half * s;
}

QuadratureReport accelerated_panel_sum(const std::function<double(double)>& g,
                                       const std::function<double(int)>& break_at,
                                       const HankelPolicy& policy) {
    policy.validate();
    std::vector<double> partials, panels;
    double running = 0.0, scale = 0.0;

    // repeated pairwise averaging of the partial-sum tail (Euler transform)
    const auto accelerate = [&](int k0) {
        std::vector<double> row;
        if (static_cast<int>(partials.size()) > k0 + 1)
            row.assign(partials.begin() + k0, partials.end());
        else
            row = partials;
        while (row.size() > 1) {
            for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
            row.pop_back();
        }
        return row.front();
    };

    QuadratureReport rep;
    double e_cur = 0.0, e_prev = 0.0, e_prev2 = 0.0;
    int have = 0;
    double min_abs_panel = std::numeric_limits<double>::max();

    int growth = 0;
    for (int k = 0; k < policy.max_panels; ++k) {
        const double lo = break_at(k), hi = break_at(k + 1);
        const double tol = 1e-12 * std::max(1.0, scale);
        // endpoint layers only ever sit in the first few panels; later lobes
        // are smooth and one bisection of 16-point Gauss already resolves them
        const int max_depth = k < 6 ? 24 : 2;
        long budget = k < 6 ? 20000 : 400;
        const double pk = adaptive_gl(g, lo, hi, tol, 0, policy.min_subdivisions, max_depth, budget);
        if (!std::isfinite(pk)) { // integrand overflowed: past any useful panel
            rep.value = e_cur;
            rep.abs_error_estimate =
                2.0 * std::max(std::abs(e_cur - e_prev), 0.5 * std::abs(e_cur - e_prev2)) +
                8e-16 * scale;
            rep.accelerated = policy.accelerate;
            rep.converged = false;
            return rep;
        }
        panels.push_back(pk);
        running += pk;
        partials.push_back(running);
        scale = std::max(scale, std::abs(running));

        e_prev2 = e_prev;
        e_prev = e_cur;
        e_cur = policy.accelerate ? accelerate(3) : running;
        ++have;
        rep.panels_used = k + 1;

        if (have >= 3 && k >= 10) {
            const double diff = std::abs(e_cur - e_prev);
            if (diff < policy.panel_rtol * std::abs(e_cur) + 1e-300) {
                rep.value = e_cur;
                rep.abs_error_estimate =
                    std::max(diff, 0.5 * std::abs(e_cur - e_prev2)) + 8e-16 * scale;
                rep.accelerated = policy.accelerate;
                rep.converged = true;
                return rep;
            }
        }
        // cancellation-noise onset: panel magnitudes should keep shrinking
        growth = (k > 0 && std::abs(pk) > std::abs(panels[k - 1])) ? growth + 1 : 0;
        if (k >= 8 && (std::abs(pk) > 5.0 * min_abs_panel || growth >= 3)) {
            rep.value = e_cur;
            rep.abs_error_estimate =
                2.0 * std::max(std::abs(e_cur - e_prev), 0.5 * std::abs(e_cur - e_prev2)) +
                8e-16 * scale;
            rep.accelerated = policy.accelerate;
            rep.converged = false;
            return rep;
        }
        min_abs_panel = std::min(min_abs_panel, std::abs(pk));
    }
    rep.value = e_cur;
    rep.abs_error_estimate = std::max(std::abs(e_cur - e_prev), 0.5 * std::abs(e_cur - e_prev2)) +
                             8e-16 * scale;
    rep.accelerated = policy.accelerate;
    rep.converged = false;
    return rep;
}

} // namespace detail

QuadratureReport hankel_j1(double tau, const std::function<double(double)>& F,
                           const HankelPolicy& policy) {
    if (!(tau > 0.0)) throw std::domain_error("hankel_j1: requires tau > 0");
    policy.validate();
    {
        std::lock_guard<std::mutex> lock(j1_zero_mutex);
        extend_j1_zeros(policy.max_panels + 1);
    }
    const auto g = [&F, tau](double u) { return -bessel_j1(u) * F(u * u / (4.0 * tau)); };
    const auto breaks = [](int k) { return k == 0 ? 0.0 : j1_zero_cache()[k - 1]; };
    QuadratureReport rep = detail::accelerated_panel_sum(g, breaks, policy);
    if (!rep.converged && rep.panels_used >= policy.max_panels)
        throw no_convergence("hankel_j1: panel budget exhausted");
    return rep;
}

double verify_g19(double lambda, double tau, const HankelPolicy& policy) {
    if (!(lambda > 0.0)) throw std::domain_error("verify_g19: requires lambda > 0");
    if (tau < 0.0) throw std::domain_error("verify_g19: requires tau >= 0");
    if (tau == 0.0) return 0.0; // both sides are exactly 1
    const auto F = [lambda](double s) { return std::expm1(-s / lambda); };
    const QuadratureReport rep = hankel_j1(tau, F, policy);
    return std::abs(rep.value - std::exp(-lambda * tau));
}

} // namespace hk
