// SPDX-License-Identifier: Apache-2.0
//
// Green-function expansions (odd and even dimension), cut-off regularization,
// the dimension-shift integral identity, and Taylor-kernel transforms.
#ifndef HK_GREEN_HPP
#define HK_GREEN_HPP

#include "hk/coeffs.hpp"
#include "hk/series.hpp"

#include <vector>

namespace hk {

struct GreenExpansion {
    int d = 3;
    double m2 = 1.0;
    CoefficientProvider provider = CoefficientProvider::flat();
    int n_max = 40;
    SeriesPolicy policy{};
};

struct CutoffParameter {
    double lambda = 1.0;
    double regularize(double sigma) const {
        const double floor = 1.0 / (2.0 * lambda * lambda);
        return sigma >= floor ? sigma : floor;
    }
};

// One structured series term: coeff * (m^2)^power * ln(m^2/2)^log_power,
// where coeff already carries the frozen Psi/Phi value and normalization.
struct GreenTerm {
    double coeff = 0.0;
    double power = 0.0;
    int log_power = 0; // 0 or 1
};

// Expansion coefficients of the odd-d series (Theorem-2 proof seeds b_1 = 1,
// c_0 = sqrt(pi/m^2) live here).
double odd_series_b(int n, double m2);
double odd_series_c(int n, double m2);

// Lemma-10 term list at fixed sigma; tail_error receives the even-d
// optimal-truncation estimate (0 for odd d and for vanishing tails).
std::vector<GreenTerm> green_series_terms(const GreenExpansion& exp, double sigma,
                                          double* tail_error = nullptr);

// Truncated Lemma-10 Green function value.
double green(const GreenExpansion& exp, double sigma);

// G_Lambda = G with sigma replaced by max(sigma, 1/(2 Lambda^2)); sigma = 0 allowed.
double green_regularized(const GreenExpansion& exp, double sigma, const CutoffParameter& cutoff);

// | int_0^inf tau^{-k/2} K_flat(d, m2, sigma; tau) dtau - (4pi)^{k/2} G_{d+k} |.
double dimension_shift_check(int d, int k, double m2, double sigma);

// sum_n c_n (-d/dm^2)^n G with the derivatives applied per-term exactly.
double taylor_kernel_transform(const GreenExpansion& exp, const std::vector<double>& c,
                               double sigma);

} // namespace hk

#endif
