// SPDX-License-Identifier: Apache-2.0
//
// The Psi and Phi function families over a coefficient provider, the Omega
// tail series, and the heat-kernel expansion itself.
#ifndef HK_PSIPHI_HPP
#define HK_PSIPHI_HPP

#include "hk/coeffs.hpp"
#include "hk/series.hpp"

namespace hk {

// Psi_alpha^omega.  Integer convention evaluates
//   Delta^{1/2} sum_k (-omega/2)^k a_{p+k} / k!,
// half-integer convention
//   Delta^{1/2} sum_k Gamma(p-k) (omega/2)^{k-p} a_k.
// Throws std::domain_error for omega <= 0.
SeriesValue psi(const CoefficientProvider& provider, FamilyIndex index, double omega,
                const SeriesPolicy& policy = {});

// Phi_k^omega = -ln(omega) Psi_k^omega + Delta^{1/2} sum_n (omega/2)^{n-k} gtilde^k_n a_n.
SeriesValue phi(const CoefficientProvider& provider, int k, double omega,
                const SeriesPolicy& policy = {});

// Omega^omega(tau) = sum_n tau^n Psi_{d/2+n}^omega, cross-checked against the
// closed double-sum form; throws std::runtime_error if the two routes disagree
// beyond 100x the policy tolerance.
SeriesValue omega_series(const CoefficientProvider& provider, int d, double omega, double tau,
                         const SeriesPolicy& policy = {});

// (4 pi tau)^{-d/2} Delta^{1/2} e^{-sigma/(2 tau) - tau m^2} sum_k tau^k a_k.
SeriesValue heat_kernel_series(const CoefficientProvider& provider, int d, double m2,
                               double sigma, double tau, const SeriesPolicy& policy = {});

} // namespace hk

#endif
