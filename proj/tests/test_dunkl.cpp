#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dunkl/dunkl.hpp"
#include "dunkl/specfun.hpp"

using namespace dunkl;

namespace {
// closed form for k = 1, z = x*y (elementary reduction of the order-1/2
// Bessel pair); independent oracle for the kernel
double e1_closed(double z) {
    if (z == 0.0) return 1.0;
    return std::sinh(z) / z + std::cosh(z) / z - std::sinh(z) / (z * z);
}
} // namespace

TEST_CASE("kernel normalization and classical limit") {
    CHECK(dunkl_kernel_1d(1.0, 1.0, 0.0) == 1.0);
    CHECK(dunkl_kernel_1d(0.7, -3.2, 0.0) == 1.0);
    CHECK(dunkl_kernel_1d(0.0, 1.3, -0.7) == doctest::Approx(std::exp(-0.91)).epsilon(1e-13));
    auto s = MultiplicitySetup::make({0.0, 0.0});
    std::vector<double> x{0.4, -1.1}, y{2.0, 0.3};
    CHECK(dunkl_kernel(s, x, y) ==
          doctest::Approx(std::exp(x[0] * y[0] + x[1] * y[1])).epsilon(1e-13));
}

TEST_CASE("kernel closed form at k = 1") {
    CHECK(dunkl_kernel_1d(1.0, 1.0, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
    // same value through the Bessel pair written out explicitly
    const double via_bessel = std::sqrt(2.0) * std::exp(specfun::log_gamma(1.5)) *
                              (specfun::bessel_i(0.5, 1.0) + specfun::bessel_i(1.5, 1.0));
    CHECK(dunkl_kernel_1d(1.0, 1.0, 1.0) == doctest::Approx(via_bessel).epsilon(1e-12));
    for (double z : {-20.0, -3.0, -0.2, 0.1, 2.0, 9.0, 33.0}) {
        CHECK(dunkl_kernel_1d(1.0, 1.0, z) == doctest::Approx(e1_closed(z)).epsilon(1e-11));
    }
}

TEST_CASE("two representations agree") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uxy(-5.0, 5.0);
    for (double k : {0.3, 1.0, 2.5}) {
        for (int i = 0; i < 200; ++i) {
            const double x = uxy(rng), y = uxy(rng);
            const double a = dunkl_kernel_1d(k, x, y);
            const double b = dunkl_kernel_1d_quadrature(k, x, y);
            CHECK(a > 0.0);
            CHECK(std::abs(a - b) / std::abs(a) < 1e-8);
        }
    }
}

TEST_CASE("kernel symmetry and positivity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-8.0, 8.0), uk(0.0, 3.0);
    for (int i = 0; i < 400; ++i) {
        const double k = uk(rng), x = u(rng), y = u(rng);
        const double a = dunkl_kernel_1d(k, x, y), b = dunkl_kernel_1d(k, y, x);
        CHECK(a > 0.0);
        CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
    }
    // scaled variant bounded and finite far beyond the overflow point
    CHECK(std::isfinite(dunkl_kernel_1d_scaled(1.5, 2000.0, 1500.0)));
    CHECK(dunkl_kernel_1d_scaled(1.5, 2000.0, 1500.0) > 0.0);
}

TEST_CASE("product kernel factorizes") {
    auto s = MultiplicitySetup::make({1.0, 2.0});
    std::vector<double> x{1.0, 2.0}, y{0.5, -1.0};
    const double prod = dunkl_kernel_1d(1.0, 1.0, 0.5) * dunkl_kernel_1d(2.0, 2.0, -1.0);
    CHECK(dunkl_kernel(s, x, y) == doctest::Approx(prod).epsilon(1e-13));
    const double q = dunkl_kernel_1d_quadrature(1.0, 1.0, 0.5) *
                     dunkl_kernel_1d_quadrature(2.0, 2.0, -1.0);
    CHECK(dunkl_kernel(s, x, y) == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("plane wave reduces to cos/sin and satisfies the derivative pairing") {
    for (double z : {-4.0, -0.3, 0.0, 1.7, 12.0}) {
        CHECK(dunkl_cosine(0.0, z) == std::cos(z));
        CHECK(dunkl_sine(0.0, z) == std::sin(z));
    }
    // d/dz cosine_k = -sine_k (finite-difference check)
    for (double k : {0.5, 1.0, 2.0}) {
        for (double z : {0.4, 1.9, 7.3}) {
            const double h = 1e-5;
            const double fd = (dunkl_cosine(k, z + h) - dunkl_cosine(k, z - h)) / (2.0 * h);
            CHECK(std::abs(fd + dunkl_sine(k, z)) < 1e-8);
        }
    }
}

TEST_CASE("orbit and reflections") {
    auto s = MultiplicitySetup::make({1.0, 1.0});
    std::vector<double> x{1.0, -2.0};
    auto pts = orbit(s, x);
    CHECK(pts.size() == 4);
    // sigma = flip axis 0 only
    SignVector sig{1u, 2};
    std::vector<double> y = x;
    sig.apply(y);
    CHECK(y[0] == -1.0);
    CHECK(y[1] == -2.0);
    // all orbit points distinct when all coordinates nonzero
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            CHECK((pts[a][0] != pts[b][0] || pts[a][1] != pts[b][1]));

    auto grid = make_grid(s, 3.0, 21);
    auto f = sample(grid, [](std::span<const double> p) { return p[0] + 10.0 * p[1] * p[1]; });
    auto rf = reflect_field(f, sig);
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<double> p(2);
        grid->node(i, p);
        CHECK(rf[i] == doctest::Approx(-p[0] + 10.0 * p[1] * p[1]).epsilon(1e-14));
    }
    // identity sign vector keeps the field
    auto same = reflect_field(f, SignVector{0u, 2});
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(same[i] == f[i]);
}

TEST_CASE("operator on hand-computable fields") {
    auto s = MultiplicitySetup::make({1.0});
    auto grid = make_grid(s, 2.0, 40, true); // staggered: no node at 0
    auto f = sample(grid, [](std::span<const double> x) { return x[0]; });
    auto Df = apply_dunkl_operator(f, 0);
    for (std::size_t i = 1; i + 1 < Df.size(); ++i) CHECK(Df[i] == doctest::Approx(3.0).epsilon(1e-10));

    auto c = sample(grid, [](std::span<const double>) { return 2.5; });
    auto Dc = apply_dunkl_operator(c, 0);
    for (std::size_t i = 0; i < Dc.size(); ++i) CHECK(std::abs(Dc[i]) < 1e-12);
    auto Lc = apply_dunkl_laplacian(c);
    for (std::size_t i = 0; i < Lc.size(); ++i) CHECK(std::abs(Lc[i]) < 1e-10);
}

namespace {
double eigen_relation_residual(double k, double y0, std::size_t count) {
    auto s = MultiplicitySetup::make({k});
    auto grid = make_grid(s, 2.0, count);
    auto E = sample(grid, [&](std::span<const double> x) { return dunkl_kernel_1d(k, x[0], y0); });
    auto DE = apply_dunkl_operator(E, 0);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < E.size(); ++i)
        worst = std::max(worst, std::abs(DE[i] - y0 * E[i]));
    return worst;
}

double laplacian_relation_residual(double k, double y0, std::size_t count) {
    auto s = MultiplicitySetup::make({k});
    auto grid = make_grid(s, 2.0, count);
    auto E = sample(grid, [&](std::span<const double> x) { return dunkl_kernel_1d(k, x[0], y0); });
    auto LE = apply_dunkl_laplacian(E);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < E.size(); ++i)
        worst = std::max(worst, std::abs(LE[i] - y0 * y0 * E[i]));
    return worst;
}
} // namespace

TEST_CASE("eigen-relation residual contracts at second order") {
    const double r1 = eigen_relation_residual(1.0, 0.8, 41);
    const double r2 = eigen_relation_residual(1.0, 0.8, 81);
    const double r3 = eigen_relation_residual(1.0, 0.8, 161);
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);
    CHECK(r2 / r3 > 3.5);
    CHECK(r2 / r3 < 4.5);

    const double l1 = laplacian_relation_residual(0.5, 1.1, 41);
    const double l2 = laplacian_relation_residual(0.5, 1.1, 81);
    CHECK(l1 / l2 > 3.5);
    CHECK(l1 / l2 < 4.5);
}

TEST_CASE("classical Laplacian reduction at k = 0") {
    auto s = MultiplicitySetup::make({0.0});
    auto grid = make_grid(s, 3.0, 301);
    auto f = sample(grid, [](std::span<const double> x) { return std::exp(-x[0] * x[0]); });
    auto Lf = apply_dunkl_laplacian(f);
    for (std::size_t i = 5; i + 5 < f.size(); ++i) {
        std::vector<double> x(1);
        grid->node(i, x);
        const double exact = (4.0 * x[0] * x[0] - 2.0) * std::exp(-x[0] * x[0]);
        CHECK(std::abs(Lf[i] - exact) < 2e-3);
    }
}

TEST_CASE("operators commute on smooth fields") {
    auto s = MultiplicitySetup::make({1.0, 0.5});
    auto grid = make_grid(s, 2.0, 41);
    auto f = sample(grid, [](std::span<const double> x) {
        return std::exp(-x[0] * x[0] - 0.5 * x[1] * x[1]) * (1.0 + x[0] * x[1]);
    });
    auto a = apply_dunkl_operator(apply_dunkl_operator(f, 0), 1);
    auto b = apply_dunkl_operator(apply_dunkl_operator(f, 1), 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    CHECK(worst < 5e-3);
}
