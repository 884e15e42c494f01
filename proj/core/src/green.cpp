// SPDX-License-Identifier: Apache-2.0
#include "hk/green.hpp"
#include "hk/hankel.hpp"
#include "hk/psiphi.hpp"
#include "hk/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hk {

double odd_series_b(int n, double m2) {
    return std::pow(-m2, n - 1) * recip_gamma(static_cast<double>(n));
}

double odd_series_c(int n, double m2) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return M_PI * sign * std::pow(m2, n - 0.5) / gamma(n + 0.5);
}

std::vector<GreenTerm> green_series_terms(const GreenExpansion& exp, double sigma,
                                          double* tail_error) {
    if (!(sigma > 0.0)) throw std::domain_error("green: requires sigma > 0");
    if (!(exp.m2 > 0.0)) throw std::domain_error("green: requires m2 > 0");
    if (exp.n_max < 1) throw std::domain_error("green: requires n_max >= 1");
    const double norm = std::pow(4.0 * M_PI, -0.5 * exp.d);
    const long support = exp.provider.support_end();
    if (tail_error) *tail_error = 0.0;
    std::vector<GreenTerm> terms;

    if (exp.d % 2 == 1) {
        for (int n = 1; n <= exp.n_max; ++n) {
            const double pv = psi(exp.provider, FamilyIndex{exp.d - 2 * n}, sigma, exp.policy).value;
            const double sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
            if (pv != 0.0)
                terms.push_back({norm * sign * recip_gamma(static_cast<double>(n)) * pv,
                                 static_cast<double>(n - 1), 0});
        }
        const int half = (exp.d - 1) / 2;
        // negative n reach only as far as the provider support feeds Psi
        const int n_lo = support > 0 ? half - static_cast<int>(support) + 1 : -exp.n_max;
        bool tail_small = support > 0;
        double last_band = 0.0;
        for (int n = n_lo; n <= exp.n_max; ++n) {
            const double pv =
                psi(exp.provider, FamilyIndex::integer(half - n), sigma, exp.policy).value;
            if (pv == 0.0) continue;
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const double coeff = norm * M_PI * sign / gamma(n + 0.5) * pv;
            terms.push_back({coeff, n - 0.5, 0});
            last_band = std::abs(coeff * std::pow(exp.m2, n - 0.5));
        }
        if (!tail_small) {
            // symmetric-band truncation: demand the outermost retained band is tiny
            double scale = 0.0;
            for (const auto& t : terms) scale = std::max(scale, std::abs(t.coeff * std::pow(exp.m2, t.power)));
            if (last_band > exp.policy.rtol * scale * 1e3)
                throw no_convergence("green: odd-d bilateral series band not small at n_max");
        }
        return terms;
    }

    // even d
    const int half = exp.d / 2;
    for (int n = 1; n <= exp.n_max; ++n) {
        const double sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
        const double bn = sign * recip_gamma(static_cast<double>(n));
        const double phv = phi(exp.provider, half - n, sigma, exp.policy).value;
        const double psv =
            psi(exp.provider, FamilyIndex::integer(half - n), sigma, exp.policy).value;
        if (phv != 0.0) terms.push_back({norm * bn * phv, static_cast<double>(n - 1), 0});
        if (psv != 0.0) {
            const double hn1 = harmonic(n - 1.0);
            terms.push_back({-norm * bn * (2.0 * euler_gamma - hn1) * psv,
                             static_cast<double>(n - 1), 0});
            terms.push_back({-norm * bn * psv, static_cast<double>(n - 1), 1});
        }
    }
    // Gamma(n)/m^{2n} tail: asymptotic for general providers; truncate at the
    // smallest term and report it as the tail error estimate
    double smallest = -1.0;
    std::vector<GreenTerm> tail;
    for (int n = 1; n <= exp.n_max; ++n) {
        const double pv =
            psi(exp.provider, FamilyIndex::integer(half - 1 + n), sigma, exp.policy).value;
        if (pv == 0.0) continue;
        const double coeff = norm * gamma(static_cast<double>(n)) * pv;
        const double mag = std::abs(coeff * std::pow(exp.m2, -n));
        if (smallest >= 0.0 && mag > smallest) break; // optimal truncation
        tail.push_back({coeff, static_cast<double>(-n), 0});
        smallest = mag;
    }
    if (tail_error && !tail.empty()) *tail_error = smallest;
    terms.insert(terms.end(), tail.begin(), tail.end());
    return terms;
}

namespace {

double evaluate_terms(const std::vector<GreenTerm>& terms, double m2) {
    const double lg = std::log(0.5 * m2);
    double s = 0.0;
    for (const auto& t : terms)
        s += t.coeff * std::pow(m2, t.power) * (t.log_power == 1 ? lg : 1.0);
    return s;
}

std::vector<GreenTerm> differentiate_terms(const std::vector<GreenTerm>& terms) {
    std::vector<GreenTerm> out;
    out.reserve(2 * terms.size());
    for (const auto& t : terms) {
        // -d/dm2 [c (m2)^a ln(m2/2)^b] = -c a (m2)^{a-1} ln^b - b c (m2)^{a-1} ln^{b-1}
        if (t.power != 0.0) out.push_back({-t.coeff * t.power, t.power - 1.0, t.log_power});
        if (t.log_power == 1) out.push_back({-t.coeff, t.power - 1.0, 0});
    }
    return out;
}

} // namespace

double green(const GreenExpansion& exp, double sigma) {
    return evaluate_terms(green_series_terms(exp, sigma), exp.m2);
}

double green_regularized(const GreenExpansion& exp, double sigma, const CutoffParameter& cutoff) {
    if (sigma < 0.0) throw std::domain_error("green_regularized: requires sigma >= 0");
    return green(exp, cutoff.regularize(sigma));
}

double dimension_shift_check(int d, int k, double m2, double sigma) {
    if (!(m2 > 0.0) || !(sigma > 0.0))
        throw std::domain_error("dimension_shift_check: requires m2, sigma > 0");
    if (d + k < 3) throw std::domain_error("dimension_shift_check: requires d + k >= 3");

    // int tau^{-k/2} (4 pi tau)^{-d/2} e^{-sigma/2tau - m2 tau} dtau on a log grid;
    // the integrand decays double-exponentially at both ends of t = ln tau
    const double p = 1.0 - 0.5 * (d + k); // tau-power after the substitution, incl. Jacobian
    const auto f = [&](double t) {
        const double tau = std::exp(t);
        const double arg = p * t - sigma / (2.0 * tau) - m2 * tau;
        return arg < -745.0 ? 0.0 : std::pow(4.0 * M_PI, -0.5 * d) * std::exp(arg);
    };
    const double t_lo = std::log(sigma / 2.0) - std::log(760.0);
    const double t_hi = std::log(745.0 / m2);
    // bisect-and-refine composite Gauss until stable
    double prev = 0.0;
    int pieces = 8;
    double val = 0.0;
    for (int round = 0; round < 8; ++round) {
        val = 0.0;
        for (int i = 0; i < pieces; ++i) {
            const double a = t_lo + (t_hi - t_lo) * i / pieces;
            const double b = t_lo + (t_hi - t_lo) * (i + 1) / pieces;
            val += detail::gauss16(f, a, b);
        }
        if (round > 1 && std::abs(val - prev) < 1e-13 * std::abs(val)) break;
        prev = val;
        pieces *= 2;
    }

    GreenExpansion shifted;
    shifted.d = d + k;
    shifted.m2 = m2;
    shifted.provider = CoefficientProvider::flat();
    const double rhs = std::pow(4.0 * M_PI, 0.5 * k) * green(shifted, sigma);
    return std::abs(val - rhs);
}

double taylor_kernel_transform(const GreenExpansion& exp, const std::vector<double>& c,
                               double sigma) {
    std::vector<GreenTerm> terms = green_series_terms(exp, sigma);
    double total = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (n > 0) terms = differentiate_terms(terms);
        if (c[n] != 0.0) total += c[n] * evaluate_terms(terms, exp.m2);
    }
    return total;
}

} // namespace hk
