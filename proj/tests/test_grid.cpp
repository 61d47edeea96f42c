#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dunkl/grid.hpp"
#include "dunkl/specfun.hpp"

using namespace dunkl;

TEST_CASE("setup constants") {
    auto s = MultiplicitySetup::make({1.0});
    CHECK(s.homogeneous_dim == doctest::Approx(3.0));
    // 2^3 Gamma(3/2) = 8 * sqrt(pi)/2
    CHECK(s.c_heat == doctest::Approx(8.0 * 0.5 * std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(s.c_heat == doctest::Approx(std::pow(2.0, s.homogeneous_dim / 2.0) * s.c_mm).epsilon(1e-12));

    auto s2 = MultiplicitySetup::make({0.5, 2.0});
    CHECK(s2.homogeneous_dim == doctest::Approx(2.0 + 1.0 + 4.0));
    CHECK(s2.c_heat == doctest::Approx(std::pow(2.0, s2.homogeneous_dim / 2.0) * s2.c_mm).epsilon(1e-12));

    CHECK_THROWS(MultiplicitySetup::make({-0.1}));
    CHECK_THROWS(MultiplicitySetup::make({}));
}

TEST_CASE("axis nodes are exactly mirror symmetric") {
    for (bool staggered : {false, true}) {
        auto ax = make_uniform_axis(0.7, 5.0, staggered ? 64 : 65);
        CHECK(ax.staggered == staggered);
        for (std::size_t i = 0; i < ax.size(); ++i) {
            CHECK(ax.nodes[ax.mirror(i)] == -ax.nodes[i]);
            CHECK(ax.weights[ax.mirror(i)] == doctest::Approx(ax.weights[i]).epsilon(1e-13));
        }
        if (!staggered) CHECK(ax.nodes[ax.zero_index()] == 0.0);
    }
}

TEST_CASE("quadrature reproduces the Gaussian moment of the measure") {
    // int |y|^{2k} e^{-y^2} dy = Gamma(k + 1/2)
    for (double k : {0.0, 0.3, 1.0, 2.5}) {
        for (std::size_t count : {201u, 200u}) {
            auto ax = make_uniform_axis(k, 9.0, count);
            double q = 0.0;
            for (std::size_t i = 0; i < ax.size(); ++i)
                q += ax.weights[i] * std::exp(-ax.nodes[i] * ax.nodes[i]);
            const double exact = std::exp(specfun::log_gamma(k + 0.5));
            CHECK(std::abs(q - exact) / exact < 1e-8);
        }
    }
}

TEST_CASE("quadrature handles the half-Gaussian of the heat normalization") {
    // int |y|^{2k} e^{-y^2/2} dy = 2^{k+1/2} Gamma(k+1/2) = per-axis c_mm
    for (double k : {0.0, 0.5, 1.7}) {
        auto ax = make_uniform_axis(k, 13.0, 261);
        double q = 0.0;
        for (std::size_t i = 0; i < ax.size(); ++i)
            q += ax.weights[i] * std::exp(-0.5 * ax.nodes[i] * ax.nodes[i]);
        const double exact = std::exp((k + 0.5) * std::log(2.0) + specfun::log_gamma(k + 0.5));
        CHECK(std::abs(q - exact) / exact < 1e-9);
    }
}

TEST_CASE("tensor grid: integration, reflection, indexing") {
    auto setup = MultiplicitySetup::make({1.0, 0.5});
    auto grid = make_grid(setup, 8.0, 97);
    auto f = sample(grid, [](std::span<const double> x) {
        return std::exp(-x[0] * x[0] - x[1] * x[1]);
    });
    const double exact = std::exp(specfun::log_gamma(1.5) + specfun::log_gamma(1.0));
    CHECK(std::abs(integrate(f) - exact) / exact < 1e-8);

    // reflection in axis 0 maps nodes to nodes: field of x0 values flips sign
    auto g = sample(grid, [](std::span<const double> x) { return x[0] + 2.0 * x[1]; });
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t r = grid->reflect_index(i, 1u);
        std::vector<double> x(2), y(2);
        grid->node(i, x);
        grid->node(r, y);
        CHECK(y[0] == -x[0]);
        CHECK(y[1] == x[1]);
    }
}

TEST_CASE("boundary ratio flags non-decaying fields") {
    auto setup = MultiplicitySetup::make({0.5});
    auto grid = make_grid(setup, 10.0, 101);
    auto good = sample(grid, [](std::span<const double> x) { return std::exp(-x[0] * x[0]); });
    auto bad = sample(grid, [](std::span<const double>) { return 1.0; });
    CHECK(boundary_ratio(good) < 1e-12);
    CHECK(boundary_ratio(bad) == doctest::Approx(1.0));
}
