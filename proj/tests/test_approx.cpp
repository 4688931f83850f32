#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "uff/approx.hpp"
#include "uff/family.hpp"

using namespace uff;

TEST_CASE("stirling binomial estimate") {
    CHECK(stirling_binom(30, 15) == doctest::Approx(1.5642e8).epsilon(1e-4));
    CHECK(stirling_report(30, 15).rel_error < 0.02);

    // tiny arguments are allowed but inaccurate, as expected
    CHECK(stirling_binom(2, 1) == doctest::Approx(2.2568).epsilon(1e-4));
    CHECK(stirling_report(2, 1).rel_error == doctest::Approx(0.1284).epsilon(1e-3));

    // log-space evaluation: no overflow at k = 100
    CHECK(std::isfinite(stirling_binom(100, 50)));
    CHECK(stirling_binom(100, 50) == doctest::Approx(1.01144e29).epsilon(1e-4));

    CHECK_THROWS_AS(stirling_binom(5, 0), std::domain_error);
    CHECK_THROWS_AS(stirling_binom(5, 5), std::domain_error);
}

TEST_CASE("stirling accuracy across the measured range") {
    for (int k = 20; k <= 60; ++k)
        for (int j = 5; j <= k - 5; ++j) CHECK(stirling_report(k, j).rel_error < 0.02);
}

TEST_CASE("central layer estimate") {
    CHECK(central_binom_approx(30) == doctest::Approx(1.5642e8).epsilon(1e-4));
    CHECK(central_report(30).rel_error < 0.02);
    CHECK(central_report(10).rel_error < 0.05);
    CHECK(central_binom_approx(1) == doctest::Approx(1.5958).epsilon(1e-4));
}

TEST_CASE("central layer accuracy: 2% at even n, weaker at odd n") {
    // The formula substitutes the exact midpoint n/2, so at odd n it
    // overshoots C(n, ceil(n/2)) by roughly e^(1/(2n)); measured worst case
    // is 3.6% at n = 21, decaying below 2% from n = 39 on.
    for (int n = 20; n <= 60; n += 2) CHECK(central_report(n).rel_error < 0.02);
    for (int n = 21; n <= 60; n += 2) CHECK(central_report(n).rel_error < 0.04);
    for (int n = 39; n <= 60; n += 2) CHECK(central_report(n).rel_error < 0.02);
    CHECK(central_report(21).rel_error > 0.02);  // the defect is real, keep it visible
}

TEST_CASE("dominance ratio") {
    const DominanceRatio twenty = dominance_ratio(20);
    CHECK(twenty.exact_ratio == doctest::Approx(184756.0 / 126.0));
    CHECK(twenty.paper_estimate == doctest::Approx(std::exp2(9.5)));

    CHECK(dominance_ratio(10).exact_ratio == doctest::Approx(42.0));
    CHECK(dominance_ratio(30).exact_ratio == doctest::Approx(155117520.0 / 3432.0));
    CHECK_THROWS_AS(dominance_ratio(3), std::invalid_argument);
}

TEST_CASE("the top chain layer dominates within a factor of 4") {
    for (int n = 10; n <= 40; ++n) {
        const DominanceRatio r = dominance_ratio(n);
        const double factor = r.exact_ratio / r.paper_estimate;
        CHECK(factor >= 1.0);
        CHECK(factor <= 4.0);
    }
}

TEST_CASE("cushion split estimate") {
    CHECK(cushion_split_estimate(30, 1) ==
          doctest::Approx(std::exp2(32) / (2 * 3.14159265358979) / std::sqrt(29.0))
              .epsilon(1e-6));
    CHECK_THROWS_AS(cushion_split_estimate(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(cushion_split_estimate(10, 10), std::invalid_argument);

    for (int n = 4; n <= 40; ++n) {
        for (int t = 1; t < n; ++t) {
            // symmetric in t <-> n-t, and always below the uncut estimate
            CHECK(cushion_split_estimate(n, t) ==
                  doctest::Approx(cushion_split_estimate(n, n - t)));
            CHECK(cushion_split_estimate(n, t) < central_binom_approx(n));
        }
    }
}

TEST_CASE("approx reports carry exact values and relative errors") {
    const ApproxReport r = stirling_report(30, 15);
    CHECK(r.exact == BigInt("155117520"));
    CHECK(r.rel_error ==
          doctest::Approx(std::abs(r.approx - 155117520.0) / 155117520.0));
    const ApproxReport c = central_report(21);
    CHECK(c.exact == BigInt("352716"));
}
