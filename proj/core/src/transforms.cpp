// SPDX-License-Identifier: Apache-2.0
#include "hk/transforms.hpp"
#include "hk/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace hk {

double f_n(int n, double s, double m2) {
    if (n < 1) throw std::domain_error("f_n: requires n >= 1");
    if (s == 0.0) return 0.0;
    if (m2 == 0.0) // only the k = n term carries no mass factor
        return std::pow(-s, n) / (std::tgamma(n + 1.0) * std::tgamma(static_cast<double>(n)));
    // t_k = (-s)^k (-m2)^{n-k} / (k! (k-1)! (n-k)!), walked by ratio
    double t = (-s) * std::pow(-m2, n - 1) / std::tgamma(static_cast<double>(n));
    double sum = t;
    for (int k = 1; k < n; ++k) {
        t *= (-s) / (-m2) * static_cast<double>(n - k) / (static_cast<double>(k + 1) * k);
        sum += t;
    }
    return sum;
}

double g_n_odd(int n, double s, double m2) {
    if (!(m2 > 0.0)) throw std::domain_error("g_n_odd: requires m2 > 0");
    if (s == 0.0) return 0.0;
    const double sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
    return M_PI * sign * std::pow(m2, n - 0.5) * s / gamma(n + 0.5) *
           hyp1f1(0.5 - n, 2.0, -s / m2);
}

double g_neg_n_even(int n, double s, double m2) {
    if (n < 1) throw std::domain_error("g_neg_n_even: requires n >= 1");
    if (!(m2 > 0.0)) throw std::domain_error("g_neg_n_even: requires m2 > 0");
    if (s == 0.0) return 0.0;
    const double head = f_n(n, s, m2) * (-2.0 * euler_gamma - std::log(0.5 * m2));
    return head + std::pow(-m2, n - 1) * s * hyp1f1_eps_derivative(n, -s / m2);
}

double g_n_even(int n, double s, double m2) {
    if (n < 0) throw std::domain_error("g_n_even: requires n >= 0");
    if (n > 120) throw std::domain_error("g_n_even: coefficient recursion overflows past n = 120");
    const double w = 1.0 / m2;
    if (n == 0) return std::expm1(-s * w);
    // (-d/dm2)^n e^{-s w} = e^{-s w} sum_j c_{n,j} s^j w^{n+j},
    // c_{1,1} = -1, c_{n+1,j} = (n+j) c_{n,j} - c_{n,j-1}
    std::vector<double> c{0.0, -1.0};
    for (int m = 1; m < n; ++m) {
        std::vector<double> next(m + 2, 0.0);
        for (int j = 1; j <= m; ++j) {
            next[j] += (m + j) * c[j];
            next[j + 1] -= c[j];
        }
        c = std::move(next);
    }
    double poly = 0.0;
    for (int j = n; j >= 1; --j) poly = poly * (s * w) + c[j];
    poly *= (s * w) * std::pow(w, n);
    return std::exp(-s * w) * poly;
}

std::pair<double, double> m_to_zero_limits(int n, double s, Parity parity) {
    const double fl = (n >= 1)
                          ? std::pow(-s, n) / (std::tgamma(n + 1.0) * std::tgamma(static_cast<double>(n)))
                          : 0.0;
    if (parity == Parity::Odd) {
        const double sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
        const double gl = M_PI * sign * std::pow(s, n + 0.5) / (gamma(n + 0.5) * gamma(n + 1.5));
        return {fl, gl};
    }
    if (n < 1) throw std::domain_error("m_to_zero_limits: even parity requires n >= 1");
    const double bracket = std::log(2.0) - std::log(s) - 3.0 * euler_gamma +
                           harmonic(static_cast<double>(n)) + harmonic(n - 1.0);
    return {fl, fl * bracket};
}

OddIntegrand::OddIntegrand(const CoefficientProvider& provider, int d, double m2, double omega,
                           int n_max, const SeriesPolicy& policy)
    : m2_(m2), norm_(std::pow(4.0 * M_PI, 0.5 * d)) {
    if (d < 1 || d % 2 == 0) throw std::domain_error("OddIntegrand: d must be odd");
    for (int n = 1; n <= n_max; ++n) {
        const double v = psi(provider, FamilyIndex{d - 2 * n}, omega, policy).value;
        if (v != 0.0) psi_f_.emplace_back(n, v);
    }
    const int half = (d - 1) / 2;
    for (int n = -n_max; n <= n_max; ++n) {
        const double v = psi(provider, FamilyIndex::integer(half - n), omega, policy).value;
        if (v != 0.0) psi_g_.emplace_back(n, v);
    }
}

double OddIntegrand::operator()(double s) const {
    // terms are unimodal in n; once three in a row are negligible the
    // factorial tails cannot come back, so the costly 1F1 calls stop early
    double tot = 0.0, scale = 1e-290;
    for (const auto& [n, v] : psi_f_) {
        const double term = f_n(n, s, m2_) * v;
        tot += term;
        scale = std::max(scale, std::abs(term));
    }
    const auto g_side = [&](auto begin, auto end) {
        int quiet = 0;
        for (auto it = begin; it != end; ++it) {
            const double term = g_n_odd(it->first, s, m2_) * it->second;
            tot += term;
            scale = std::max(scale, std::abs(term));
            quiet = std::abs(term) < 1e-19 * scale ? quiet + 1 : 0;
            if (quiet >= 3) break;
        }
    };
    const auto mid = std::partition_point(psi_g_.begin(), psi_g_.end(),
                                          [](const auto& p) { return p.first < 1; });
    g_side(mid, psi_g_.end());                                      // n >= 1 upward
    g_side(std::make_reverse_iterator(mid), psi_g_.rend());         // n <= 0 downward
    return tot / norm_;
}

EvenIntegrand::EvenIntegrand(const CoefficientProvider& provider, int d, double m2, double omega,
                             int n_max, const SeriesPolicy& policy)
    : m2_(m2), norm_(std::pow(4.0 * M_PI, 0.5 * d)) {
    if (d < 2 || d % 2 != 0) throw std::domain_error("EvenIntegrand: d must be even");
    const int half = d / 2;
    phi_.resize(n_max + 1, 0.0);
    psi_.resize(n_max + 1, 0.0);
    psi_up_.resize(n_max + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        phi_[n] = phi(provider, half - n, omega, policy).value;
        psi_[n] = psi(provider, FamilyIndex::integer(half - n), omega, policy).value;
    }
    for (int n = 0; n <= n_max; ++n)
        psi_up_[n] = psi(provider, FamilyIndex::integer(half + n), omega, policy).value;
}

double EvenIntegrand::split_kernel(double s) const {
    double tot = 0.0, scale = 1e-290;
    int quiet = 0;
    for (std::size_t n = 1; n < phi_.size(); ++n) {
        const int ni = static_cast<int>(n);
        if (phi_[n] != 0.0) {
            const double term = f_n(ni, s, m2_) * phi_[n];
            tot += term;
            scale = std::max(scale, std::abs(term));
        }
        if (psi_[n] != 0.0 && quiet < 3) {
            const double term = g_neg_n_even(ni, s, m2_) * psi_[n];
            tot += term;
            scale = std::max(scale, std::abs(term));
            quiet = std::abs(term) < 1e-19 * scale ? quiet + 1 : 0;
        }
    }
    return tot / norm_;
}

double EvenIntegrand::omega_tail(double s) const {
    double tot = 0.0;
    for (std::size_t n = 0; n < psi_up_.size(); ++n)
        if (psi_up_[n] != 0.0) tot += g_n_even(static_cast<int>(n), s, m2_) * psi_up_[n];
    return tot;
}

double EvenIntegrand::full_kernel(double s) const {
    // one assembly of the full-kernel theorem: f-sum plus the bilateral g-sum
    // over Psi_{d/2+n}, n running over all of Z, normalized once at the end
    double tot = 0.0, scale = 1e-290;
    int quiet = 0;
    for (std::size_t n = 0; n < psi_up_.size(); ++n)
        if (psi_up_[n] != 0.0) tot += g_n_even(static_cast<int>(n), s, m2_) * psi_up_[n];
    for (std::size_t n = 1; n < phi_.size(); ++n) {
        const int ni = static_cast<int>(n);
        if (phi_[n] != 0.0) {
            const double term = f_n(ni, s, m2_) * phi_[n];
            tot += term;
            scale = std::max(scale, std::abs(term));
        }
        if (psi_[n] != 0.0 && quiet < 3) {
            const double term = g_neg_n_even(ni, s, m2_) * psi_[n];
            tot += term;
            scale = std::max(scale, std::abs(term));
            quiet = std::abs(term) < 1e-19 * scale ? quiet + 1 : 0;
        }
    }
    return tot / norm_;
}

namespace {

// residual stabilization in the series cut: grow n_max until the retained band
// moves the residual by less than a tenth of the target tolerance
template <typename Residual>
double stabilize_cut(Residual&& residual, int n_start, double tol) {
    double prev = residual(n_start);
    for (int n = n_start + 5; n <= n_start + 35; n += 5) {
        const double cur = residual(n);
        if (std::abs(cur - prev) < 0.1 * tol) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace

double verify_theorem_odd(const CoefficientProvider& provider, int d, double m2, double tau,
                          double omega, double tol, const SeriesPolicy& series,
                          const HankelPolicy& quad) {
    if (!(m2 > 0.0)) throw std::domain_error("verify_theorem_odd: requires m2 > 0");
    const double lhs = heat_kernel_series(provider, d, m2, omega, tau, series).value;
    const auto residual = [&](int n_cut) {
        const OddIntegrand F(provider, d, m2, omega, n_cut, series);
        const QuadratureReport rep = hankel_j1(tau, [&F](double s) { return F(s); }, quad);
        return std::abs(lhs - rep.value);
    };
    return stabilize_cut(residual, 25, tol);
}

EvenTheoremResiduals verify_theorem_even(const CoefficientProvider& provider, int d, double m2,
                                         double tau, double omega, double tol,
                                         const SeriesPolicy& series, const HankelPolicy& quad) {
    if (!(m2 > 0.0)) throw std::domain_error("verify_theorem_even: requires m2 > 0");
    const double kernel = heat_kernel_series(provider, d, m2, omega, tau, series).value;
    const double norm = std::pow(4.0 * M_PI, 0.5 * d);
    SeriesPolicy omega_policy = series;
    omega_policy.max_terms = std::max(series.max_terms, 120);
    const double omega_val = omega_series(provider, d, omega, tau, omega_policy).value;
    const double lhs3 = kernel - std::exp(-tau * m2) * omega_val / norm;
    const double lhs4 = std::exp(-tau * m2) * omega_val;

    EvenTheoremResiduals out;
    const auto res3 = [&](int n_cut) {
        const EvenIntegrand F(provider, d, m2, omega, n_cut, series);
        const auto rep = hankel_j1(tau, [&F](double s) { return F.split_kernel(s); }, quad);
        return std::abs(lhs3 - rep.value);
    };
    const auto res5 = [&](int n_cut) {
        const EvenIntegrand F(provider, d, m2, omega, n_cut, series);
        const auto rep = hankel_j1(tau, [&F](double s) { return F.full_kernel(s); }, quad);
        return std::abs(kernel - rep.value);
    };
    out.theorem3 = stabilize_cut(res3, 25, tol);
    out.theorem5 = stabilize_cut(res5, 25, tol);

    const EvenIntegrand F(provider, d, m2, omega, 40, series);
    if (omega_val == 0.0) {
        out.theorem4_omega = 0.0; // transform of the zero tail is zero term-wise
    } else {
        const auto rep = hankel_j1(tau, [&F](double s) { return F.omega_tail(s); }, quad);
        out.theorem4_omega = std::abs(lhs4 - rep.value);
    }
    for (double s : {0.3, 1.0, 4.7, 12.0, 33.0}) {
        const double lhs = F.full_kernel(s);
        const double rhs = F.split_kernel(s) + F.omega_tail(s) / norm;
        out.additivity = std::max(out.additivity, std::abs(lhs - rhs));
    }
    return out;
}

double verify_late_time_split(const CoefficientProvider& provider, int d, double omega,
                              int n_check, const SeriesPolicy& policy) {
    if (d < 2 || d % 2 != 0) throw std::domain_error("verify_late_time_split: d must be even");
    if (!(omega > 0.0)) throw std::domain_error("verify_late_time_split: requires omega > 0");
    const int half = d / 2;
    const long support = provider.support_end();
    const long kmax = support > 0 ? support : std::max(policy.max_terms, 200);
    const double norm = std::pow(4.0 * M_PI, -0.5 * d) * provider.vanvleck_sqrt();

    // coefficient of tau^p in the massless kernel times e^{-omega/2tau}
    const auto kernel_coef = [&](int p) {
        double sum = 0.0;
        for (long k = std::max<long>(0, p + half); k < kmax + std::abs(p) + half; ++k) {
            const long j = k - p - half;
            const double term = provider.a(k) * std::pow(-omega / 2.0, static_cast<double>(j)) *
                                recip_gamma(static_cast<double>(j + 1));
            sum += term;
            if (support > 0 && k >= support) break;
            if (k > p + half + 8 && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-280)) break;
        }
        return norm * sum;
    };
    // coefficient of tau^p in Omega/(4pi)^{d/2} from the closed double sum
    const auto omega_coef = [&](int p) {
        if (p < 0) return 0.0;
        double sum = 0.0;
        for (long nn = p + half; nn < kmax + p + half; ++nn) {
            const long kk = nn - p - half;
            const double term = provider.a(nn) * std::pow(-omega / 2.0, static_cast<double>(kk)) *
                                recip_gamma(static_cast<double>(kk + 1));
            sum += term;
            if (support > 0 && nn >= support) break;
            if (kk > 8 && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-280)) break;
        }
        return norm * sum;
    };

    double worst = 0.0;
    for (int p = -n_check; p <= n_check; ++p) {
        double rhs = 0.0;
        if (p < 0)
            rhs = norm / provider.vanvleck_sqrt() *
                  psi(provider, FamilyIndex::integer(half + p), omega, policy).value;
        const double diff = std::abs(kernel_coef(p) - omega_coef(p) - rhs);
        worst = std::max(worst, diff);
    }
    return worst;
}

} // namespace hk
