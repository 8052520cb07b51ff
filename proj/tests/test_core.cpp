#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bell/enumerate.hpp"
#include "bell/types.hpp"

using namespace bell;

TEST_CASE("functional_value on worked points") {
    // (1+i)(1-i) = 2 at w=1, achievable by a two-site strategy
    MomentPoint p{Rational(1), 2, 0};
    CHECK(functional_value(2, p, BellFunctional::chsh()) == Rational(2));

    MomentPoint null{Rational(0), 0, 0};
    CHECK(functional_value(null, BellFunctional::chsh()) == Rational(0));
    CHECK(functional_value(null, BellFunctional::mermin()) == Rational(0));
    CHECK(functional_value(null, BellFunctional::svetlichny()) == Rational(0));

    MomentPoint q{Rational(1), -2, 2};
    CHECK(functional_value(q, BellFunctional::mermin()) == Rational(-2));
    CHECK(functional_value(q, BellFunctional::ardehali()) == Rational(0));
    CHECK(functional_value(q, BellFunctional::ardehali(-1, +1)) == Rational(4));
}

TEST_CASE("CHSH requires two sites") {
    MomentPoint p{Rational(1), 2, 0};
    CHECK_THROWS_AS(functional_value(3, p, BellFunctional::chsh()), domain_error);
}

TEST_CASE("site count and efficiency validation") {
    CHECK_THROWS_AS(SiteCount(0), domain_error);
    CHECK_THROWS_AS(SiteCount(17), domain_error);
    CHECK_THROWS_AS(EfficiencyProfile({0.5, 1.2}), domain_error);
    CHECK(EfficiencyProfile::symmetric(3, 0.9).product() == doctest::Approx(0.729));
}

TEST_CASE("moment_of matches direct products") {
    // |z|^2 = prod(a^2+b^2) and w = prod((|a|+|b|)/2) for every strategy
    const int n = 3;
    for (int code = 0; code < 9 * 9 * 9; ++code) {
        DeterministicStrategy s;
        int c = code;
        for (int k = 0; k < n; ++k) {
            s.assignments.emplace_back(c % 3 - 1, (c / 3) % 3 - 1);
            c /= 9;
        }
        MomentPoint p = moment_of(s);

        long long norm = 1;
        Rational w(1);
        for (auto [a, b] : s.assignments) {
            norm *= a * a + b * b;
            w *= Rational(std::abs(a) + std::abs(b), 2);
        }
        CHECK(p.re_z * p.re_z + p.im_z * p.im_z == norm);
        CHECK(norm <= (1LL << n));
        CHECK(p.w == w);
    }
}

TEST_CASE("strategy set closed under both z reflections") {
    for (int n : {2, 3, 4}) {
        auto set = enumerate_moment_points(SiteCount(n), EnumerationMode::Direct);
        std::set<std::tuple<long long, long long, long long, long long>> pts;
        for (const MomentPoint& p : set.points)
            pts.insert({p.w.numerator(), p.w.denominator(), p.re_z, p.im_z});
        for (const MomentPoint& p : set.points) {
            CHECK(pts.count({p.w.numerator(), p.w.denominator(), p.re_z, -p.im_z}) == 1);
            CHECK(pts.count({p.w.numerator(), p.w.denominator(), -p.re_z, p.im_z}) == 1);
        }
    }
}

TEST_CASE("signs (+,+) reach the set maximum over all sign choices") {
    for (int n : {2, 3, 4}) {
        auto set = enumerate_moment_points(SiteCount(n), EnumerationMode::Direct);
        auto set_max = [&](const BellFunctional& f) {
            Rational best(-1000);
            for (const MomentPoint& p : set.points) best = std::max(best, functional_value(p, f));
            return best;
        };
        Rational plus = set_max(BellFunctional::ardehali(+1, +1));
        for (int sr : {-1, 1})
            for (int si : {-1, 1}) CHECK(plus >= set_max(BellFunctional::ardehali(sr, si)));
    }
}

TEST_CASE("envelope polyline validation rejects bad shapes") {
    EnvelopePolyline env;
    env.vertices = {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(2)}};
    CHECK_NOTHROW(env.validate());

    env.vertices = {{Rational(1, 4), Rational(1)}};
    CHECK_THROWS_AS(env.validate(), domain_error);

    // convex kink
    env.vertices = {{Rational(0), Rational(0)},
                    {Rational(1, 2), Rational(1, 2)},
                    {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(env.validate(), domain_error);
}
