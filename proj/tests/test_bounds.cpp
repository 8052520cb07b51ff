#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bell/bounds.hpp"

using namespace bell;

TEST_CASE("holder bound worked examples") {
    CHECK(holder_bound(SiteCount(3), BellFunctional::mermin(), 1.0) ==
          doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-12));
    CHECK(holder_bound(SiteCount(4), BellFunctional::ardehali(), 0.25) ==
          doctest::Approx(std::pow(2.0, 2.5) * 0.5).epsilon(1e-12));
    CHECK(holder_bound(SiteCount(5), BellFunctional::svetlichny(), 0.0) == 0.0);
    CHECK_THROWS_AS(holder_bound(SiteCount(3), BellFunctional::mermin(), -0.1), domain_error);
    CHECK_THROWS_AS(holder_bound(SiteCount(3), BellFunctional::mermin(), 1.1), domain_error);
}

TEST_CASE("mabk bound worked examples") {
    CHECK(mabk_bound(SiteCount(2), BellFunctional::chsh()) == 2.0);
    CHECK(mabk_bound(SiteCount(3), BellFunctional::mermin()) == 2.0);
    CHECK(mabk_bound(SiteCount(4), BellFunctional::svetlichny()) == 8.0);
    CHECK(mabk_bound(SiteCount(4), BellFunctional::ardehali()) == 4.0);
}

TEST_CASE("holder and mabk coincide at w = 1/2, exactly") {
    for (int n = 2; n <= 12; ++n) {
        BellFunctional f = n % 2 == 0 ? BellFunctional::ardehali() : BellFunctional::mermin();
        CHECK(holder_bound_exact(SiteCount(n), f, -1) == mabk_bound_exact(SiteCount(n), f));
    }
    // CHSH is the n=2 Ardehali instance
    CHECK(holder_bound_exact(SiteCount(2), BellFunctional::chsh(), -1) ==
          mabk_bound_exact(SiteCount(2), BellFunctional::chsh()));
}

TEST_CASE("exact bounds agree with the floating forms") {
    for (int n = 2; n <= 10; ++n) {
        for (auto f : {BellFunctional::mermin(), BellFunctional::ardehali(),
                       BellFunctional::svetlichny()}) {
            CHECK(mabk_bound_exact(SiteCount(n), f).value() ==
                  doctest::Approx(mabk_bound(SiteCount(n), f)).epsilon(1e-14));
            CHECK(holder_bound_exact(SiteCount(n), f, -2).value() ==
                  doctest::Approx(holder_bound(SiteCount(n), f, 0.25)).epsilon(1e-13));
        }
    }
}

TEST_CASE("tight analytic bound melds the branches") {
    SiteCount n(3);
    BellFunctional f = BellFunctional::mermin();
    CHECK(tight_analytic_bound(n, f, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(tight_analytic_bound(n, f, 0.8) == 2.0);
    CHECK(tight_analytic_bound(n, f, 0.3) ==
          doctest::Approx(std::pow(2.0, 1.5) * std::sqrt(0.3)).epsilon(1e-12));

    // continuity and monotonicity on a fine grid
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double w = i / 1000.0;
        double v = tight_analytic_bound(n, f, w);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("region classification partitions [0,1]") {
    CHECK(classify_region(SiteCount(3), 0.6) == RegionLabel::MABK);
    CHECK(classify_region(SiteCount(3), 0.05) == RegionLabel::LHV_no_violation);
    CHECK(classify_region(SiteCount(3), 0.3) == RegionLabel::Holder);
    // boundary ties resolve upward
    CHECK(classify_region(SiteCount(3), 0.5) == RegionLabel::MABK);
    CHECK(classify_region(SiteCount(3), 0.125) == RegionLabel::Holder);
    CHECK_THROWS_AS(classify_region(SiteCount(3), -0.01), domain_error);
    for (int n = 2; n <= 8; ++n)
        for (int i = 0; i <= 512; ++i)
            CHECK_NOTHROW(classify_region(SiteCount(n), i / 512.0));  // no gaps
}

TEST_CASE("analytic threshold worked values") {
    auto t3 = analytic_threshold(SiteCount(3));
    CHECK(t3.w_star == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t3.eta_symmetric == doctest::Approx(std::pow(2.0, -1.0 / 3.0)).epsilon(1e-14));
    CHECK(t3.quantum_crosses_holder);

    auto t4 = analytic_threshold(SiteCount(4));
    CHECK(t4.w_star == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(t4.eta_symmetric == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));

    auto t2 = analytic_threshold(SiteCount(2));
    CHECK_FALSE(t2.quantum_crosses_holder);
    CHECK(t2.w_star == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(t2.eta_symmetric == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-14));

    // large-n limit approaches 1/2
    CHECK(analytic_threshold(SiteCount(16)).eta_symmetric ==
          doctest::Approx(std::pow(2.0, 2.0 / 16.0 - 1.0)).epsilon(1e-14));
    double prev_w = 1.0, prev_eta = 1.0;
    for (int n = 3; n <= 16; ++n) {
        auto t = analytic_threshold(SiteCount(n));
        CHECK(t.w_star < prev_w);
        CHECK(t.eta_symmetric < prev_eta);
        CHECK(t.eta_symmetric > 0.5);
        prev_w = t.w_star;
        prev_eta = t.eta_symmetric;
    }
}

TEST_CASE("braunstein-mann threshold") {
    CHECK(braunstein_mann_threshold(SiteCount(2)) ==
          doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-14));
    CHECK(braunstein_mann_threshold(SiteCount(3)) ==
          doctest::Approx(analytic_threshold(SiteCount(3)).eta_symmetric).epsilon(1e-14));
    CHECK(braunstein_mann_threshold(SiteCount(16)) > std::pow(2.0, -0.5));
    // the Holder route wins strictly for n > 3
    for (int n = 4; n <= 16; ++n)
        CHECK(braunstein_mann_threshold(SiteCount(n)) >
              analytic_threshold(SiteCount(n)).eta_symmetric);
}

TEST_CASE("asymmetric threshold is a strict product inequality") {
    CHECK(asymmetric_threshold_check(EfficiencyProfile({1, 1, 1, 1, 0.2})));
    CHECK_FALSE(asymmetric_threshold_check(EfficiencyProfile({0.5, 0.5, 0.5})));
    CHECK_FALSE(asymmetric_threshold_check(EfficiencyProfile({1, 1, 1, 0.25})));  // not strict
}

TEST_CASE("svetlichny requirement") {
    auto r4 = svetlichny_requirement(SiteCount(4));
    CHECK(r4.w_threshold == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(r4.eta_symmetric == doctest::Approx(std::pow(2.0, -1.0 / 8.0)).epsilon(1e-14));
    CHECK(svetlichny_requirement(SiteCount(16)).eta_symmetric ==
          doctest::Approx(std::pow(2.0, -1.0 / 32.0)).epsilon(1e-14));
}
