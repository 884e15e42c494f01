// SPDX-License-Identifier: Apache-2.0
//
// Oscillatory quadrature engine for the order-1 Hankel transform
//   -int_0^inf sqrt(tau/s) J1(2 sqrt(tau s)) F(s) ds
// and for the cosine/J0 oracle integrals that share its panel structure.
#ifndef HK_HANKEL_HPP
#define HK_HANKEL_HPP

#include <functional>

namespace hk {

struct QuadratureReport {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int panels_used = 0;
    bool accelerated = false;
    bool converged = false;
};

struct HankelPolicy {
    int max_panels = 400;
    double panel_rtol = 1e-9;
    bool accelerate = true;
    // every panel is bisected at least this many times before the error test
    int min_subdivisions = 0;

    void validate() const;
};

// k-th positive zero of J1 (k >= 1), to near machine accuracy.
double bessel_j1_zero(int k);

// The substitution u = 2 sqrt(tau s) turns the transform into
// -int_0^inf J1(u) F(u^2 / 4 tau) du, integrated panel-by-panel between J1
// zeros with Gauss-Legendre nodes and Euler-style averaging of the panel sums.
// Panels are cut off early once their magnitude is dominated by cancellation
// noise in F; the averaged estimate at that point is returned.
QuadratureReport hankel_j1(double tau, const std::function<double(double)>& F,
                           const HankelPolicy& policy = {});

// |hankel_j1(tau, e^{-s/lambda} - 1) - e^{-lambda tau}|; 0 exactly at tau = 0.
double verify_g19(double lambda, double tau, const HankelPolicy& policy = {});

namespace detail {

// Accelerated sum over integrals of g between consecutive breakpoints
// break_at(0) < break_at(1) < ...; used for the cos and rho-J0 oracles too.
QuadratureReport accelerated_panel_sum(const std::function<double(double)>& g,
                                       const std::function<double(int)>& break_at,
                                       const HankelPolicy& policy);

double gauss16(const std::function<double(double)>& f, double a, double b);

} // namespace detail
} // namespace hk

#endif
