// SPDX-License-Identifier: Apache-2.0
//
// Scalar special functions: Gamma and friends, Bessel J0/J1/K0, confluent
// hypergeometric 1F1 (with its epsilon-derivative variant) and 0F2.
#ifndef HK_SPECFUN_HPP
#define HK_SPECFUN_HPP

namespace hk {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// Gamma(x); throws std::domain_error at non-positive integers.
double gamma(double x);

// 1/Gamma(x); entire, exactly 0.0 at non-positive integers.
double recip_gamma(double x);

// digamma psi(x); throws std::domain_error at non-positive integers.
double digamma(double x);

// Analytically continued harmonic number H_z = euler_gamma + psi(z+1).
// Agrees with sum_{j=1}^n 1/j at non-negative integers; poles at z = -1, -2, ...
double harmonic(double z);

double bessel_j0(double x);
double bessel_j1(double x);

// Modified Bessel K0; log series for small x, asymptotic expansion beyond.
// Throws std::domain_error for x <= 0.
double bessel_k0(double x);

// Confluent hypergeometric 1F1(a, b; x).  Terminating polynomial when a is a
// non-positive integer; direct power series for x >= -30; Kummer-transformed
// scaled series below that (stable for arbitrarily large negative x).
double hyp1f1(double a, double b, double x);

// d/de at e=0 of  e^{-gamma*e} / Gamma(n+e) * 1F1(1-n-e, 2; x),  n >= 1.
// Evaluated term-wise with digamma weights; Kummer-transformed for x < -30.
double hyp1f1_eps_derivative(int n, double x);

// Generalized hypergeometric 0F2(; b1, b2; z) by power series.
double hyp0f2(double b1, double b2, double z);

namespace detail {
// true if x is within eps of a non-positive integer
bool is_nonpositive_integer(double x);
} // namespace detail

} // namespace hk

#endif
