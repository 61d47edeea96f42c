#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dunkl/geometry.hpp"

using namespace dunkl;
using namespace dunkl::geometry;

TEST_CASE("ball measure closed forms in one dimension") {
    auto k1 = MultiplicitySetup::make({1.0});
    auto k0 = MultiplicitySetup::make({0.0});
    std::vector<double> zero{0.0}, two{2.0}, x{-0.7};
    CHECK(mu_ball(k1, zero, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(mu_ball(k1, two, 1.0) == doctest::Approx(26.0 / 3.0).epsilon(1e-12));
    CHECK(mu_ball(k0, x, 0.35) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK_THROWS(mu_ball(k0, x, -1.0));
    CHECK(mu_ball(k0, x, 0.0) == 0.0);
}

TEST_CASE("ball measure in two dimensions vs Monte Carlo") {
    auto s = MultiplicitySetup::make({1.0, 0.5});
    std::vector<double> c{0.4, -0.3};
    const double q = mu_ball(s, c, 1.3);
    double se = 0.0;
    const double mc = mu_ball_mc(s, c, 1.3, 400000, 99, &se);
    CHECK(std::abs(q - mc) < 3.0 * se);

    // k = 0 reduces to the area of the disc
    auto s0 = MultiplicitySetup::make({0.0, 0.0});
    CHECK(mu_ball(s0, c, 2.0) == doctest::Approx(M_PI * 4.0).epsilon(1e-9));
}

TEST_CASE("ball measure in three dimensions reduces to the volume at k = 0") {
    auto s = MultiplicitySetup::make({0.0, 0.0, 0.0});
    std::vector<double> c{0.2, 0.1, -0.4};
    CHECK(mu_ball(s, c, 1.1) ==
          doctest::Approx(4.0 / 3.0 * M_PI * 1.1 * 1.1 * 1.1).epsilon(1e-8));
}

TEST_CASE("doubling report brackets") {
    auto s = MultiplicitySetup::make({1.0});
    std::vector<double> origin{0.0}, far{50.0};
    // at the origin the measure is exactly homogeneous of degree N
    auto rep0 = doubling_report(s, origin, 0.5, 2.0);
    CHECK(rep0.ratio == doctest::Approx(rep0.upper_base).epsilon(1e-12));
    // far from the wall the weight is locally constant: degree n
    auto repf = doubling_report(s, far, 0.5, 2.0);
    CHECK(std::abs(repf.ratio - repf.lower_base) / repf.lower_base < 0.05);
    // R = r
    auto rep1 = doubling_report(s, origin, 1.0, 1.0);
    CHECK(rep1.ratio == doctest::Approx(1.0));
    // general bracket over random samples
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-10.0, 10.0), ur(0.05, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double r = ur(rng);
        const double R = r * (1.0 + std::abs(ux(rng)));
        std::vector<double> x{ux(rng)};
        auto rep = doubling_report(s, x, r, R);
        CHECK(rep.ratio >= 0.999999 * rep.lower_base);
        CHECK(rep.ratio <= 1.000001 * rep.upper_base);
    }
}

TEST_CASE("quasi-distance closed cases") {
    auto k0 = MultiplicitySetup::make({0.0});
    auto k1 = MultiplicitySetup::make({1.0});
    std::vector<double> a{-1.0}, b{1.0};
    CHECK(quasi_distance(k0, a, b) == doctest::Approx(2.0).epsilon(1e-10));
    std::vector<double> p{0.3}, q{2.0};
    CHECK(quasi_distance(k0, p, q) == doctest::Approx(1.7).epsilon(1e-10));
    // minimizing ball for k=1, x=-1, y=1 is centered at 0 with r=1
    CHECK(quasi_distance(k1, a, b) == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK(quasi_distance(k1, a, a) == 0.0);

    // exhaustive 1-d oracle over centers
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 40; ++i) {
        std::vector<double> x{u(rng)}, y{u(rng)};
        double best = 1e300;
        const double lo = std::min(x[0], y[0]), hi = std::max(x[0], y[0]);
        for (int m = 0; m <= 20000; ++m) {
            const double c = lo + (hi - lo) * double(m) / 20000.0;
            const double r = std::max(std::abs(c - x[0]), std::abs(c - y[0]));
            if (r == 0.0) {
                best = 0.0;
                continue;
            }
            std::vector<double> cc{c};
            best = std::min(best, mu_ball(k1, cc, r));
        }
        CHECK(quasi_distance(k1, x, y) <= best * (1.0 + 1e-6) + 1e-12);
        CHECK(quasi_distance(k1, x, y) >= best * (1.0 - 1e-4) - 1e-12);
    }
}

TEST_CASE("quasi-distance symmetry and box search agreement") {
    auto s2 = MultiplicitySetup::make({1.0, 0.5});
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 15; ++i) {
        std::vector<double> x{u(rng), u(rng)}, y{u(rng), u(rng)};
        const double d1 = quasi_distance(s2, x, y);
        const double d2 = quasi_distance(s2, y, x);
        CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
        const double db = quasi_distance_boxsearch(s2, x, y);
        // segment search is an upper bound; off-segment centers can
        // genuinely win in two dimensions (observed up to ~35% lower)
        CHECK(db <= d1 * (1.0 + 1e-6));
        CHECK(db >= d1 * 0.5);
    }
}

TEST_CASE("t_of_r closed forms and consistency") {
    auto k0 = MultiplicitySetup::make({0.0});
    auto k1 = MultiplicitySetup::make({1.0});
    std::vector<double> x{1.7}, origin{0.0};
    const double r = 0.9;
    CHECK(t_of_r(k0, x, r) == doctest::Approx(r * r / 4.0).epsilon(1e-7));
    CHECK(t_of_r(k1, origin, r) == doctest::Approx(std::pow(1.5 * r, 2.0 / 3.0)).epsilon(1e-7));
    for (double rr : {0.1, 1.0, 7.0}) {
        const double t = t_of_r(k1, x, rr);
        CHECK(std::abs(mu_ball(k1, x, std::sqrt(t)) - rr) <= 1e-8 * rr);
    }
}

TEST_CASE("quasi-triangle constant and quasi-ball measure comparability") {
    auto s = MultiplicitySetup::make({1.0});
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    double worstA = 0.0;
    for (int i = 0; i < 2000; ++i) {
        std::vector<double> x{u(rng)}, y{u(rng)}, z{u(rng)};
        const double dxy = quasi_distance(s, x, y);
        const double dxz = quasi_distance(s, x, z);
        const double dzy = quasi_distance(s, z, y);
        if (dxz + dzy > 0.0) worstA = std::max(worstA, dxy / (dxz + dzy));
    }
    CHECK(std::isfinite(worstA));
    CHECK(worstA < 50.0);

    std::uniform_real_distribution<double> ur(0.01, 20.0);
    for (int i = 0; i < 40; ++i) {
        const double x = u(rng), r = ur(rng);
        const double m = quasi_ball_measure_1d(s, x, r);
        CHECK(m / r > 0.2);
        CHECK(m / r < 5.0);
    }
}
