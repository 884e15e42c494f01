// SPDX-License-Identifier: Apache-2.0
#include "hk/coeffs.hpp"
#include "hk/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace hk;

TEST_CASE("integer family seed and pole structure") {
    CHECK(g_int(0, 0) == 1.0);
    CHECK(g_int(2, 1) == 0.0); // k < p
    CHECK(g_int(2, 3) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("half-integer family values") {
    const double s2pi = std::sqrt(2.0 * M_PI);
    CHECK(g_half(1, 0) == doctest::Approx(s2pi).epsilon(1e-14));
    CHECK(g_half(1, 1) == doctest::Approx(2.0 * s2pi).epsilon(1e-14));
    CHECK(g_half(3, 0) == doctest::Approx(s2pi).epsilon(1e-14));
    CHECK_THROWS_AS(g_half(2, 0), std::invalid_argument);
}

TEST_CASE("the defining recurrences hold for both conventions") {
    // g^a_{k-1} = g^a_k (k - a)  and  g^{a+1}_k = -2 g^a_{k-1}
    for (int p = -3; p <= 3; ++p)
        for (int k = 1; k <= 40; ++k) {
            const double gk = g_int(p, k);
            if (gk != 0.0)
                CHECK(g_int(p, k - 1) == doctest::Approx(gk * (k - p)).epsilon(1e-12));
            CHECK(g_int(p + 1, k) == doctest::Approx(-2.0 * g_int(p, k - 1)).epsilon(1e-12));
        }
    for (int t = -5; t <= 5; t += 2)
        for (int k = 1; k <= 40; ++k) {
            const double alpha = 0.5 * t;
            const double gk = g_half(t, k);
            CHECK(g_half(t, k - 1) == doctest::Approx(gk * (k - alpha)).epsilon(1e-12));
            CHECK(g_half(t + 2, k) == doctest::Approx(-2.0 * g_half(t, k - 1)).epsilon(1e-12));
        }
}

TEST_CASE("g_tilde branches and shift identity") {
    CHECK(g_tilde(2, 0) == doctest::Approx(1.0).epsilon(1e-15)); // Gamma(2)
    CHECK(g_tilde(0, 0) == 0.0);                                 // H_0
    CHECK(g_tilde(0, 2) == doctest::Approx(0.75).epsilon(1e-15));
    for (int k = -10; k <= 10; ++k)
        for (int n = 0; n <= 30; ++n) CHECK(g_tilde(k, n) == g_tilde(k + 1, n + 1));
}

TEST_CASE("coefficient providers") {
    const auto fl = CoefficientProvider::flat();
    CHECK(seeley_dewitt(fl, 0) == 1.0);
    CHECK(seeley_dewitt(fl, 3) == 0.0);
    CHECK(seeley_dewitt(fl, -2) == 0.0);

    const auto cp = CoefficientProvider::constant_potential(2.0);
    CHECK(seeley_dewitt(cp, 3) == doctest::Approx(8.0 / 6.0).epsilon(1e-15));
    SUBCASE("flat-space specialization of the recurrence: (k+1) a_{k+1} = v a_k") {
        const auto cp2 = CoefficientProvider::constant_potential(-0.7);
        for (long k = 0; k < 30; ++k)
            CHECK((k + 1) * cp2.a(k + 1) == doctest::Approx(-0.7 * cp2.a(k)).epsilon(1e-13));
    }

    CHECK_THROWS_AS(CoefficientProvider::table({2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientProvider::table({}), std::invalid_argument);
    const auto tb = CoefficientProvider::table({1.0, 0.25}, 1.5);
    CHECK(tb.a(1) == 0.25);
    CHECK(tb.a(2) == 0.0);
    CHECK(tb.vanvleck_sqrt() == 1.5);
}

TEST_CASE("provider table JSON loader") {
    const auto p = CoefficientProvider::from_json(R"({"a": [1.0, 0.5, 0.1], "vanvleck_sqrt": 2.0})");
    CHECK(p.a(0) == 1.0);
    CHECK(p.a(2) == 0.1);
    CHECK(p.vanvleck_sqrt() == 2.0);
    const auto q = CoefficientProvider::from_json(R"({"a": [1.0]})");
    CHECK(q.vanvleck_sqrt() == 1.0);
    CHECK_THROWS(CoefficientProvider::from_json(R"({"a": [3.0]})"));
    CHECK_THROWS(CoefficientProvider::from_json(R"({"vanvleck_sqrt": 1.0})"));
}

TEST_CASE("family index arithmetic stays exact") {
    FamilyIndex p = FamilyIndex::of(-3.5);
    for (int i = 0; i < 7; ++i) p = p.succ();
    CHECK(p.value() == 3.5);
    CHECK(!p.is_integer());
    CHECK(FamilyIndex::of(2.0).is_integer());
    CHECK_THROWS_AS(FamilyIndex::of(0.3), std::invalid_argument);
}
