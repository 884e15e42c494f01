// SPDX-License-Identifier: Apache-2.0
//
// Theorem-level coefficient functions f_n, g_n (odd and even dimension), the
// assembled Hankel integrands, and numerical verification of the transform
// theorems and the late-time split.
#ifndef HK_TRANSFORMS_HPP
#define HK_TRANSFORMS_HPP

#include "hk/coeffs.hpp"
#include "hk/hankel.hpp"
#include "hk/psiphi.hpp"
#include "hk/series.hpp"

#include <utility>
#include <vector>

namespace hk {

enum class Parity { Odd, Even };

struct TransformCoefficients {
    Parity parity = Parity::Odd;
    double m2 = 1.0;
    int d = 1;
    int n_max = 25;
};

// f_n(s) = sum_{k=1}^n (-s)^k (-m^2)^{n-k} / (k! (k-1)! Gamma(n-k+1)), n >= 1.
double f_n(int n, double s, double m2);

// Odd-d companion: pi (-1)^{n-1} m^{2n-1} s / Gamma(n+1/2) 1F1(1/2-n, 2; -s/m^2).
double g_n_odd(int n, double s, double m2);

// Even-d negative-branch companion built on the epsilon-derivative of 1F1.
double g_neg_n_even(int n, double s, double m2);

// Even-d positive branch: (-d/dm^2)^n [e^{-s/m^2} - 1], exact polynomial recursion.
double g_n_even(int n, double s, double m2);

// m -> 0 closed-form limits of (f_n, g-family); .first = lim f_n, .second = lim g.
std::pair<double, double> m_to_zero_limits(int n, double s, Parity parity);

// Integrand of the odd-dimension transform theorem at fixed omega; Psi values
// are frozen per n so each evaluation only loops over the coefficient functions.
class OddIntegrand {
  public:
    OddIntegrand(const CoefficientProvider& provider, int d, double m2, double omega, int n_max,
                 const SeriesPolicy& policy = {});
    double operator()(double s) const;

  private:
    double m2_;
    double norm_;
    std::vector<std::pair<int, double>> psi_f_; // (n, Psi_{d/2-n}) half-integer family
    std::vector<std::pair<int, double>> psi_g_; // (n, Psi_{(d-1)/2-n}) integer family
};

// Integrands of the even-dimension theorems (the split kernel, the Omega tail,
// and the full kernel).
class EvenIntegrand {
  public:
    EvenIntegrand(const CoefficientProvider& provider, int d, double m2, double omega, int n_max,
                  const SeriesPolicy& policy = {});
    double split_kernel(double s) const; // Theorem-3 bracket, normalized
    double omega_tail(double s) const;   // Theorem-4 bracket, unnormalized
    double full_kernel(double s) const;  // Theorem-5 bracket: one sum over all of Z
    double normalization() const { return norm_; }

  private:
    double m2_;
    double norm_;
    std::vector<double> phi_;    // Phi_{d/2-n}, n = 1..n_max
    std::vector<double> psi_;    // Psi_{d/2-n}, n = 1..n_max
    std::vector<double> psi_up_; // Psi_{d/2+n}, n = 0..n_max
};

// |LHS - RHS| of the odd-d transform theorem at sigma = omega.  The series cut
// starts at n_max and grows until the residual is stable within tol/10.
double verify_theorem_odd(const CoefficientProvider& provider, int d, double m2, double tau,
                          double omega, double tol = 1e-5, const SeriesPolicy& series = {},
                          const HankelPolicy& quad = {});

struct EvenTheoremResiduals {
    double theorem3 = 0.0;       // split kernel vs Phi/Psi transform
    double theorem5 = 0.0;       // full kernel vs Phi/Psi transform
    double theorem4_omega = 0.0; // Omega piece vs its Psi transform
    double additivity = 0.0;     // max |F5 - F3 - F4/norm| over sampled s
};

EvenTheoremResiduals verify_theorem_even(const CoefficientProvider& provider, int d, double m2,
                                         double tau, double omega, double tol = 1e-5,
                                         const SeriesPolicy& series = {},
                                         const HankelPolicy& quad = {});

// Lemma-9 split as formal Laurent series in tau (massless kernel): max
// coefficient residual over powers tau^p, |p| <= n_check.
double verify_late_time_split(const CoefficientProvider& provider, int d, double omega,
                              int n_check, const SeriesPolicy& policy = {});

} // namespace hk

#endif
