// SPDX-License-Identifier: Apache-2.0
#include "hk/psiphi.hpp"
#include "hk/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace hk;

namespace {
const CoefficientProvider kFlat = CoefficientProvider::flat();
}

TEST_CASE("psi examples") {
    CHECK(psi(kFlat, FamilyIndex::integer(0), 0.8).value == doctest::Approx(1.0));
    CHECK(psi(kFlat, FamilyIndex::integer(-1), 0.8).value == doctest::Approx(-0.4));
    CHECK(psi(kFlat, FamilyIndex::half_integer(1), 2.0).value ==
          doctest::Approx(1.7724538509055159).epsilon(1e-13));
    // constant potential collapses to J0(sqrt(2 omega v))
    const auto cp = CoefficientProvider::constant_potential(1.0);
    CHECK(psi(cp, FamilyIndex::integer(0), 2.0).value ==
          doctest::Approx(bessel_j0(2.0)).epsilon(1e-12));
    CHECK(psi(cp, FamilyIndex::integer(0), 2.0).value ==
          doctest::Approx(0.22389077914123567).epsilon(1e-12));
}

TEST_CASE("psi respects domain and policy limits") {
    CHECK_THROWS_AS(psi(kFlat, FamilyIndex::integer(0), 0.0), std::domain_error);
    CHECK_THROWS_AS(psi(kFlat, FamilyIndex::integer(0), -1.0), std::domain_error);
    SeriesPolicy bad;
    bad.max_terms = 2;
    CHECK_THROWS_AS(psi(kFlat, FamilyIndex::integer(0), 1.0, bad), std::invalid_argument);
    // a policy too tight to converge flags rather than throws
    const auto cp = CoefficientProvider::constant_potential(3.0);
    SeriesPolicy tight;
    tight.max_terms = 4;
    CHECK_FALSE(psi(cp, FamilyIndex::integer(0), 6.0, tight).converged);
}

TEST_CASE("flat psi vanishes for positive integer index, deep negative index works") {
    CHECK(psi(kFlat, FamilyIndex::integer(1), 1.3).value == 0.0);
    CHECK(psi(kFlat, FamilyIndex::integer(3), 0.4).value == 0.0);
    // leading zero coefficients must not trip early termination
    const double want = std::pow(-0.35, 5) / 120.0; // (-omega/2)^5 / 5!
    CHECK(psi(kFlat, FamilyIndex::integer(-5), 0.7).value == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("van vleck factor scales the family") {
    const auto scaled = CoefficientProvider::table({1.0, 0.3}, 2.5);
    const auto unit = CoefficientProvider::table({1.0, 0.3}, 1.0);
    CHECK(psi(scaled, FamilyIndex::integer(0), 0.9).value ==
          doctest::Approx(2.5 * psi(unit, FamilyIndex::integer(0), 0.9).value).epsilon(1e-15));
}

TEST_CASE("phi examples") {
    CHECK(phi(kFlat, 0, std::exp(1.0)).value == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(phi(kFlat, 1, 2.0).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phi(kFlat, -1, 2.0).value == doctest::Approx(std::log(2.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("omega series vanishes flat and cross-checks otherwise") {
    CHECK(omega_series(kFlat, 2, 1.0, 0.1).value == 0.0);
    SeriesPolicy policy;
    policy.max_terms = 120;
    const auto cp = CoefficientProvider::constant_potential(1.0);
    const SeriesValue v = omega_series(cp, 2, 0.5, 0.05, policy); // double-sum check is internal
    CHECK(v.converged);
    CHECK(std::isfinite(v.value));
    const auto tb = CoefficientProvider::table({1.0, 0.3, 0.02});
    CHECK(std::isfinite(omega_series(tb, 4, 0.2, 0.01, policy).value));
    CHECK_THROWS_AS(omega_series(kFlat, 3, 1.0, 0.1), std::domain_error);
}

TEST_CASE("heat kernel closed forms") {
    // flat massless d=3: (4 pi tau)^{-3/2} e^{-sigma/(2 tau)}
    const double want3 = std::pow(4.0 * M_PI * 0.1, -1.5) * std::exp(-2.5);
    CHECK(heat_kernel_series(kFlat, 3, 0.0, 0.5, 0.1).value ==
          doctest::Approx(want3).epsilon(1e-14));
    // flat massive d=1
    const double want1 = std::pow(4.0 * M_PI * 0.1, -0.5) * std::exp(-0.1 - 0.1);
    CHECK(heat_kernel_series(kFlat, 1, 1.0, 0.02, 0.1).value ==
          doctest::Approx(want1).epsilon(1e-14));
}

TEST_CASE("constant potential factorizes as a mass shift") {
    SeriesPolicy policy;
    policy.max_terms = 200;
    for (double v : {0.5, -1.2})
        for (int d : {1, 2, 3})
            for (double tau : {0.05, 0.4}) {
                const auto cp = CoefficientProvider::constant_potential(v);
                const double got = heat_kernel_series(cp, d, 2.0, 0.3, tau, policy).value;
                const double want = heat_kernel_series(kFlat, d, 2.0 - v, 0.3, tau, policy).value;
                CHECK(got == doctest::Approx(want).epsilon(1e-12));
            }
}
