// SPDX-License-Identifier: Apache-2.0
#include "hk/coeffs.hpp"
#include "hk/fd.hpp"
#include "hk/psiphi.hpp"
#include "hk/specfun.hpp"
#include "hk/transforms.hpp"
#include "hk/qfuncs.hpp"

#include <doctest.h>

#include <cmath>

using namespace hk;

TEST_CASE("q1 and q2 vanish at s = 0 and match their dual series forms") {
    CHECK(q1(0.0, 0.7) == 0.0);
    CHECK(q2(0.0, 0.7) == 0.0);
    // Q1 = (4pi)^{-1/2} sum_k (-s)^k/k! (sigma/2)^{k-1/2} Gamma(1/2-k)/Gamma(k)
    const auto q1_alt = [](double s, double sg) {
        double sum = 0.0, tk = 1.0;
        for (int k = 1; k <= 120; ++k) {
            tk *= -s / k;
            sum += tk * std::pow(0.5 * sg, k - 0.5) * hk::gamma(0.5 - k) * recip_gamma(k);
        }
        return sum / std::sqrt(4.0 * M_PI);
    };
    // Q2 = -sqrt(pi s)/2 sum_k (s sigma/2)^k / (k! Gamma(k+1/2) Gamma(k+3/2))
    const auto q2_alt = [](double s, double sg) {
        double sum = 0.0, pk = 1.0;
        for (int k = 0; k <= 120; ++k) {
            if (k > 0) pk *= 0.5 * s * sg / k;
            sum += pk / (hk::gamma(k + 0.5) * hk::gamma(k + 1.5));
        }
        return -0.5 * std::sqrt(M_PI * s) * sum;
    };
    for (double s : {0.5, 1.0, 4.0})
        for (double sg : {0.25, 1.0}) {
            CHECK(q1(s, sg) == doctest::Approx(q1_alt(s, sg)).epsilon(1e-10));
            CHECK(q2(s, sg) == doctest::Approx(q2_alt(s, sg)).epsilon(1e-10));
        }
    CHECK(q1(40.0, 0.5) > q1(20.0, 0.5)); // the first family grows without bound
    CHECK_THROWS_AS(q1(3.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(q1(1000.0, 1.0), no_convergence);
}

TEST_CASE("defining integral equals Q1 + Q2") {
    for (double s : {1.0, 5.0})
        for (double sg : {0.5, 1.0})
            CHECK(q_sum_oracle(s, sg) == doctest::Approx(q1(s, sg) + q2(s, sg)).epsilon(1e-7));
    CHECK(q_sum_oracle(0.0, 1.0) == 0.0);
}

TEST_CASE("q_d reductions and derivatives") {
    for (double s : {0.5, 2.0, 11.0})
        for (double sg : {0.3, 1.0})
            CHECK(q_d(1, s, sg) == doctest::Approx(q1(s, sg) + q2(s, sg)).epsilon(1e-12));
    CHECK(q_d(3, 0.0, 0.5) == 0.0);
    // d = 3: -(1/2pi) d/dsigma of (Q1+Q2)
    const double s = 2.0, sg = 0.5;
    const auto f = [s](double x) { return q1(s, x) + q2(s, x); };
    const double oracle = (-1.0 / (2.0 * M_PI)) * central_derivative(f, sg, 1e-5 * sg);
    CHECK(q_d(3, s, sg) == doctest::Approx(oracle).epsilon(1e-5));
}

TEST_CASE("even q_d matches the assembled massless theorem series") {
    for (double s : {0.5, 1.0, 3.0, 8.0})
        for (double sg : {0.5, 1.0}) {
            const double diff = std::abs(q_d(2, s, sg) - massless_even_assembly(s, sg));
            CHECK(diff < 1e-8);
        }
    // the log growth cancels: the d=2 sum decays along the figure window
    CHECK(std::abs(q_d(2, 40.0, 0.5)) < std::abs(q_d(2, 4.0, 0.5)));
}

TEST_CASE("appendix T series against its defining integral and ODE") {
    CHECK(t_appendix(1.0, 0.0) == 0.0);
    CHECK(t_appendix(1.0, 1.0) == doctest::Approx(t_integral_oracle(1.0, 1.0)).epsilon(1e-6));
    CHECK(t_appendix(0.5, 2.0) == doctest::Approx(t_integral_oracle(0.5, 2.0)).epsilon(1e-6));
    CHECK(t_ode_residual(1.0, 1.0) < 1e-10);
    CHECK(t_ode_residual(0.5, 2.0) < 1e-10);
    CHECK(t_ode_residual(2.0, 0.3) < 1e-10);
}

TEST_CASE("the odd massless split identities") {
    // sum_k lim f_k Psi_{1/2-k} / sqrt(4pi) = Q1, and the g-limit sum gives Q2
    const auto flat = CoefficientProvider::flat();
    const double norm = std::sqrt(4.0 * M_PI);
    for (double s : {0.1, 1.0, 5.0}) {
        const double sg = 0.7;
        double sum_f = 0.0, sum_g = 0.0;
        for (int k = 1; k <= 80; ++k) {
            const auto lim = m_to_zero_limits(k, s, Parity::Odd);
            sum_f += lim.first * psi(flat, FamilyIndex{1 - 2 * k}, sg).value / norm;
        }
        for (int k = 0; k <= 80; ++k) {
            const auto lim = m_to_zero_limits(k, s, Parity::Odd);
            sum_g += lim.second * psi(flat, FamilyIndex::integer(-k), sg).value / norm;
        }
        CHECK(sum_f == doctest::Approx(q1(s, sg)).epsilon(1e-9));
        CHECK(sum_g == doctest::Approx(q2(s, sg)).epsilon(1e-9));
    }
}
