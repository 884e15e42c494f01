// SPDX-License-Identifier: Apache-2.0
#include "hk/fd.hpp"
#include "hk/hankel.hpp"
#include "hk/series.hpp"
#include "hk/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace hk;

TEST_CASE("gamma basics") {
    CHECK(hk::gamma(0.5) == doctest::Approx(1.7724538509055159).epsilon(1e-14));
    CHECK(hk::gamma(4.0) == doctest::Approx(6.0).epsilon(1e-14));
    // reflection-formula value at -1/2 is -2 sqrt(pi)
    CHECK(hk::gamma(-0.5) == doctest::Approx(-3.5449077018110318).epsilon(1e-13));
    CHECK_THROWS_AS(hk::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(hk::gamma(-3.0), std::domain_error);
}

TEST_CASE("recip_gamma vanishes at poles and inverts gamma elsewhere") {
    CHECK(recip_gamma(0.0) == 0.0);
    CHECK(recip_gamma(-3.0) == 0.0);
    CHECK(recip_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double x = -29.75; x <= 30.0; x += 0.5) {
        if (detail::is_nonpositive_integer(x)) continue;
        CHECK(recip_gamma(x) * hk::gamma(x) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("harmonic numbers and their analytic continuation") {
    CHECK(harmonic(3.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
    CHECK(harmonic(0.0) == 0.0);
    CHECK(harmonic(0.5) == doctest::Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-13));
    double prev = 0.0;
    for (int n = 1; n <= 50; ++n) {
        const double cur = harmonic(static_cast<double>(n));
        CHECK(cur - prev == doctest::Approx(1.0 / n).epsilon(1e-13));
        prev = cur;
    }
    CHECK_THROWS_AS(harmonic(-1.0), std::domain_error);
}

TEST_CASE("bessel J values") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(2.0) == doctest::Approx(0.22389077914123567).epsilon(1e-12));
    CHECK(bessel_j1(1.0) == doctest::Approx(0.44005058574493352).epsilon(1e-12));
    // both sides of the series/asymptotic seam against reference values
    CHECK(bessel_j0(13.999999) == doctest::Approx(0.17107360948553258).epsilon(1e-10));
    CHECK(bessel_j0(14.000001) == doctest::Approx(0.17107334273522319).epsilon(1e-10));
    CHECK(bessel_j1(13.999999) == doctest::Approx(0.13337499315204179).epsilon(1e-10));
    CHECK(bessel_j1(14.000001) == doctest::Approx(0.13337531624540048).epsilon(1e-10));
}

TEST_CASE("integral of J1 over the half line is 1") {
    const auto g = [](double u) { return bessel_j1(u); };
    const auto breaks = [](int k) { return k == 0 ? 0.0 : bessel_j1_zero(k); };
    HankelPolicy policy;
    const QuadratureReport rep = detail::accelerated_panel_sum(g, breaks, policy);
    CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("J1' + J1/x = J0 by finite differences") {
    for (double x = 0.1; x <= 50.0; x += 3.7) {
        const double d = central_derivative([](double t) { return bessel_j1(t); }, x, 1e-6 * x + 1e-9);
        CHECK(bessel_j1(x) / x + d == doctest::Approx(bessel_j0(x)).epsilon(1e-6));
    }
}

TEST_CASE("K0 matches its defining oscillatory integral") {
    CHECK(bessel_k0(1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_k0(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k0(-1.0), std::domain_error);
    // int_0^inf rho J0(rho sqrt(2 omega)) / (rho^2 + m^2) drho = K0(sqrt(2 m^2 omega))
    const double m2 = 1.0, omega = 0.5;
    const double q = std::sqrt(2.0 * omega);
    const auto g = [&](double rho) { return rho * bessel_j0(q * rho) / (rho * rho + m2); };
    const auto breaks = [&](int k) {
        if (k == 0) return 0.0;
        double x = (k - 0.25) * M_PI;
        for (int it = 0; it < 20; ++it) x -= bessel_j0(x) / (-bessel_j1(x));
        return x / q;
    };
    HankelPolicy policy;
    const QuadratureReport rep = detail::accelerated_panel_sum(g, breaks, policy);
    CHECK(rep.value == doctest::Approx(bessel_k0(1.0)).epsilon(1e-8));
    // seam continuity
    CHECK(bessel_k0(11.999) == doctest::Approx(bessel_k0(12.001)).epsilon(1e-6));
}

TEST_CASE("hyp1f1 terminating and series cases") {
    CHECK(hyp1f1(0.0, 2.0, -5.0) == 1.0);
    CHECK(hyp1f1(-1.0, 2.0, -2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hyp1f1(0.5, 2.0, 0.0) == 1.0);
    CHECK_THROWS_AS(hyp1f1(0.5, -1.0, 1.0), std::domain_error);
    // both sides of the Kummer seam against reference values
    CHECK(hyp1f1(-0.5, 2.0, -29.9) == doctest::Approx(4.2161288120772361).epsilon(1e-8));
    CHECK(hyp1f1(-0.5, 2.0, -30.1) == doctest::Approx(4.2295240222168649).epsilon(1e-12));
    // deep negative argument stays finite and positive for a < 0 with odd degree
    const double v = hyp1f1(-1.5, 2.0, -900.0);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
}

TEST_CASE("hyp1f1 epsilon derivative") {
    CHECK(hyp1f1_eps_derivative(1, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(hyp1f1_eps_derivative(2, 0.0) == doctest::Approx(-1.0).epsilon(1e-13));
    // central finite difference in epsilon, h = 1e-5
    const auto fd = [](int n, double x) {
        const double h = 1e-5;
        const auto F = [&](double e) {
            return std::exp(-euler_gamma * e) / std::tgamma(n + e) * hyp1f1(1.0 - n - e, 2.0, x);
        };
        return (F(h) - F(-h)) / (2.0 * h);
    };
    for (int n = 1; n <= 10; ++n)
        for (double x : {-20.0, -7.5, -1.0, 0.0}) {
            const double got = hyp1f1_eps_derivative(n, x);
            const double want = fd(n, x);
            CHECK(got == doctest::Approx(want).epsilon(1e-6));
        }
    // both routes at the seam against reference values
    CHECK(hyp1f1_eps_derivative(3, -29.9) == doctest::Approx(71.355694956256272).epsilon(1e-8));
    CHECK(hyp1f1_eps_derivative(3, -30.1) == doctest::Approx(72.751913949041633).epsilon(1e-12));
}

TEST_CASE("hyp0f2 against a direct Pochhammer sum") {
    CHECK(hyp0f2(1.5, 2.0, 0.0) == 1.0);
    CHECK(hyp0f2(0.5, 1.5, 0.0) == 1.0);
    const auto oracle = [](double b1, double b2, double z) {
        double sum = 0.0;
        for (int k = 200; k >= 0; --k) {
            double t = 1.0;
            for (int j = 0; j < k; ++j) t *= z / ((b1 + j) * (b2 + j) * (j + 1.0));
            sum += t;
        }
        return sum;
    };
    for (double z : {1.0, 10.0, 100.0}) {
        CHECK(hyp0f2(1.5, 2.0, z) == doctest::Approx(oracle(1.5, 2.0, z)).epsilon(1e-9));
        CHECK(hyp0f2(0.5, 1.5, z) == doctest::Approx(oracle(0.5, 1.5, z)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(hyp0f2(-1.0, 2.0, 1.0), std::domain_error);
}
