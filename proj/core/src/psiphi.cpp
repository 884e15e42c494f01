// SPDX-License-Identifier: Apache-2.0
#include "hk/psiphi.hpp"
#include "hk/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hk {

namespace {

void require_positive(double omega, const char* who) {
    if (!(omega > 0.0)) throw std::domain_error(std::string(who) + ": requires omega > 0");
}

// Finite-support providers are summed exactly; infinite ones run under the
// policy's three-small-terms rule.  Terms are buffered and added smallest
// first to keep cancellation in the half-integer negative powers in check.
SeriesValue finish(std::vector<double>& terms, bool converged, double scale) {
    SeriesValue out;
    out.value = scale * detail::sum_descending(terms);
    out.terms_used = static_cast<int>(terms.size());
    out.converged = converged;
    return out;
}

} // namespace

SeriesValue psi(const CoefficientProvider& provider, FamilyIndex index, double omega,
                const SeriesPolicy& policy) {
    require_positive(omega, "psi");
    policy.validate();
    const long support = provider.support_end();
    std::vector<double> terms;

    if (index.is_integer()) {
        const long p = index.int_value();
        if (support > 0) {
            // a_{p+k} vanishes beyond the table: exact finite sum
            double t = 1.0;
            for (long k = 0; p + k < support; ++k) {
                if (k > 0) t *= (-omega / 2.0) / static_cast<double>(k);
                terms.push_back(t * provider.a(p + k));
            }
            return finish(terms, true, provider.vanvleck_sqrt());
        }
        // leading a_{p+k} = 0 entries (p < 0) must not trip the tail test
        const long skip = std::max<long>(0, -p);
        double t = 1.0, partial = 0.0;
        detail::TermCounter counter(policy);
        for (long k = 0; k < skip + policy.max_terms; ++k) {
            if (k > 0) t *= (-omega / 2.0) / static_cast<double>(k);
            const double term = t * provider.a(p + k);
            terms.push_back(term);
            partial += term;
            if (k >= skip && counter.done(term, partial))
                return finish(terms, true, provider.vanvleck_sqrt());
        }
        return finish(terms, false, provider.vanvleck_sqrt());
    }

    // half-integer: Gamma(p-k) (omega/2)^{k-p} a_k
    const double p = index.value();
    if (support > 0) {
        for (long k = 0; k < support; ++k)
            terms.push_back(gamma(p - k) * std::pow(omega / 2.0, k - p) * provider.a(k));
        return finish(terms, true, provider.vanvleck_sqrt());
    }
    double partial = 0.0;
    detail::TermCounter counter(policy);
    for (long k = 0; !counter.exhausted(); ++k) {
        const double term = gamma(p - k) * std::pow(omega / 2.0, k - p) * provider.a(k);
        terms.push_back(term);
        partial += term;
        if (counter.done(term, partial)) return finish(terms, true, provider.vanvleck_sqrt());
    }
    return finish(terms, false, provider.vanvleck_sqrt());
}

SeriesValue phi(const CoefficientProvider& provider, int k, double omega,
                const SeriesPolicy& policy) {
    require_positive(omega, "phi");
    policy.validate();
    const SeriesValue head = psi(provider, FamilyIndex::integer(k), omega, policy);
    const long support = provider.support_end();
    std::vector<double> terms;
    bool converged = head.converged;
    int used = head.terms_used;

    if (support > 0) {
        for (long n = 0; n < support; ++n)
            terms.push_back(std::pow(omega / 2.0, n - k) * g_tilde(k, static_cast<int>(n)) *
                            provider.a(n));
    } else {
        double partial = 0.0;
        detail::TermCounter counter(policy);
        bool tail_ok = false;
        for (long n = 0; !counter.exhausted(); ++n) {
            const double term = std::pow(omega / 2.0, n - k) * g_tilde(k, static_cast<int>(n)) *
                                provider.a(n);
            terms.push_back(term);
            partial += term;
            if (counter.done(term, partial)) {
                tail_ok = true;
                break;
            }
        }
        converged = converged && tail_ok;
    }
    used += static_cast<int>(terms.size());

    SeriesValue out;
    out.value = -std::log(omega) * head.value +
                provider.vanvleck_sqrt() * detail::sum_descending(terms);
    out.terms_used = used;
    out.converged = converged;
    return out;
}

SeriesValue omega_series(const CoefficientProvider& provider, int d, double omega, double tau,
                         const SeriesPolicy& policy) {
    if (d < 2 || d % 2 != 0) throw std::domain_error("omega_series: d must be even and >= 2");
    require_positive(omega, "omega_series");
    if (!(tau > 0.0)) throw std::domain_error("omega_series: requires tau > 0");
    policy.validate();
    const int half_d = d / 2;
    const long support = provider.support_end();

    // Psi-sum route
    SeriesValue out;
    {
        double tn = 1.0, partial = 0.0;
        detail::TermCounter counter(policy);
        bool fin = false;
        for (long n = 0; !counter.exhausted(); ++n) {
            if (n > 0) tn *= tau;
            if (support > 0 && half_d + n >= support) {
                fin = true;
                break;
            }
            const SeriesValue pv = psi(provider, FamilyIndex::integer(half_d + static_cast<int>(n)),
                                       omega, policy);
            const double term = tn * pv.value;
            partial += term;
            out.terms_used += pv.terms_used;
            if (counter.done(term, partial)) {
                fin = true;
                break;
            }
        }
        out.value = partial;
        out.converged = fin;
    }

    // closed double-sum route (Eq. with the truncated exponential)
    double cross = 0.0;
    {
        const double x = -omega / (2.0 * tau);
        double tn = std::pow(tau, half_d); // tau^n at n = d/2, combined with tau^{-d/2} below
        detail::TermCounter counter(policy);
        for (long n = half_d; !counter.exhausted(); ++n) {
            if (n > half_d) tn *= tau;
            if (support > 0 && n >= support) break;
            double inner = 1.0, t = 1.0;
            for (long kk = 1; kk <= n - half_d; ++kk) {
                t *= x / static_cast<double>(kk);
                inner += t;
            }
            const double term = provider.a(n) * tn * inner;
            cross += term;
            if (counter.done(term, cross)) break;
        }
        cross *= provider.vanvleck_sqrt() * std::pow(tau, -static_cast<double>(half_d));
    }

    const double tol = 100.0 * (policy.rtol * std::max(std::abs(out.value), std::abs(cross)) +
                                policy.atol + 1e-15 * std::abs(out.value));
    if (std::abs(out.value - cross) > std::max(tol, 1e-12))
        throw std::runtime_error("omega_series: Psi-sum and double-sum routes disagree");
    return out;
}

SeriesValue heat_kernel_series(const CoefficientProvider& provider, int d, double m2,
                               double sigma, double tau, const SeriesPolicy& policy) {
    if (!(tau > 0.0)) throw std::domain_error("heat_kernel_series: requires tau > 0");
    policy.validate();
    const double prefactor = std::pow(4.0 * M_PI * tau, -0.5 * d) * provider.vanvleck_sqrt() *
                             std::exp(-sigma / (2.0 * tau) - tau * m2);
    const long support = provider.support_end();
    SeriesValue out;
    double sum = 0.0, tn = 1.0;
    if (support > 0) {
        for (long k = 0; k < support; ++k) {
            if (k > 0) tn *= tau;
            sum += tn * provider.a(k);
        }
        out.converged = true;
        out.terms_used = static_cast<int>(support);
    } else {
        detail::TermCounter counter(policy);
        for (long k = 0; !counter.exhausted(); ++k) {
            if (k > 0) tn *= tau;
            const double term = tn * provider.a(k);
            sum += term;
            out.terms_used = counter.used();
            if (counter.done(term, sum)) {
                out.converged = true;
                break;
            }
        }
    }
    out.value = prefactor * sum;
    return out;
}

} // namespace hk
