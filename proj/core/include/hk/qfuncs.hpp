// SPDX-License-Identifier: Apache-2.0
//
// Massless-limit closed forms: Q1, Q2, Q(d, s, sigma) for every dimension,
// the appendix function T(omega, s), and quadrature oracles for the defining
// oscillatory integrals.
#ifndef HK_QFUNCS_HPP
#define HK_QFUNCS_HPP

#include "hk/hankel.hpp"

namespace hk {

struct QEvaluation {
    int d = 1;
    double s = 0.0;
    double sigma = 1.0;
    double value = 0.0;
    int terms_used = 0;
};

// Q1(s, sigma) = s sqrt(sigma/2) 0F2(; 3/2, 2; s sigma / 2).
double q1(double s, double sigma);

// Q2(s, sigma) = -sqrt(s/pi) 0F2(; 1/2, 3/2; s sigma / 2).
double q2(double s, double sigma);

// Defining integral (1/pi) int_0^inf cos(rho sqrt(2 sigma)) (e^{-s/rho^2}-1) drho,
// integrated between cosine zeros with the shared panel accelerator.
double q_sum_oracle(double s, double sigma, const HankelPolicy& policy = {});

// Q(d, s, sigma): the explicit odd-d pair of series, or the single even-d
// logarithmic series (with the harmonic/Gamma composite continued analytically
// where its index is a non-positive integer).
double q_d(int d, double s, double sigma);
QEvaluation q_d_eval(int d, double s, double sigma);

// Appendix series T(omega, s); equals the rho-J0 defining integral.
double t_appendix(double omega, double s);

// |2 d_omega s d^2_s T - T| with all derivatives applied term-wise.
double t_ode_residual(double omega, double s);

// Quadrature oracle for T: 2 int_0^inf rho J0(rho sqrt(2 omega)) (e^{-s/rho^2}-1) drho.
double t_integral_oracle(double omega, double s, const HankelPolicy& policy = {});

// The two even-d massless theorem sums assembled from the m->0 limits against
// flat-provider Phi/Psi values; equals Q(2, s, sigma).
double massless_even_assembly(double s, double sigma);

} // namespace hk

#endif
