#pragma once

// Heat kernel, its positive-orthant Bessel counterpart, the Poisson
// kernel by subordination, grid operator applies, and the comparability
// and upper-bound checkers for both kernels.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl::kernels {

// one axis factor of the heat kernel; assembled from the scaled kernel
// so that only the bounded exponent -(|x|-|y|)^2/4t is ever taken
double heat_kernel_1d(double k, double t, double x, double y);
double log_heat_kernel_1d(double k, double t, double x, double y);
double heat_kernel(const MultiplicitySetup& setup, double t, std::span<const double> x,
                   std::span<const double> y);

// product Bessel heat kernel on the open positive orthant
double bessel_heat_kernel_1d(double k, double t, double x, double y);
double bessel_heat_kernel(const MultiplicitySetup& setup, double t, std::span<const double> x,
                          std::span<const double> y);

// Quadrature for (1/sqrt(pi)) int_0^inf e^{-u} g(u) du / sqrt(u),
// written in the substituted variable u = v^2 so the endpoint
// singularity disappears.  mass_check() applies it to g = 1 (exact
// value 1); halving panel widths must reproduce values to 1e-8.
struct SubordinationRule {
    std::vector<double> u;      // evaluation points in the original variable
    std::vector<double> weight; // includes e^{-u}, the 1/sqrt(pi) and du/sqrt(u)
    double v_max = 8.0;
    int panels = 32;

    static SubordinationRule make(int panels = 32, int nodes_per_panel = 10, double v_max = 8.0);
    double mass_check() const;
};

const SubordinationRule& default_subordination_rule();

double poisson_kernel(const MultiplicitySetup& setup, double t, std::span<const double> x,
                      std::span<const double> y,
                      const SubordinationRule& rule = default_subordination_rule());

// ---- operator applies on sampled fields ------------------------------

// e^{tL} f by the tensorized kernel matrix; accurate once sqrt(2t) is a
// few grid spacings wide (see resolved_heat_time)
SampledField heat_apply(const SampledField& f, double t, bool parallel = true);
double resolved_heat_time(const Grid& g);

// e^{tL} on the positive orthant via the Bessel kernel; field values
// are taken on the positive-orthant nodes of a staggered grid
SampledField bessel_heat_apply(const SampledField& f_even, double t);

// ---- mass and bound checks -------------------------------------------

// int h_t(x, .) d mu over a domain chosen so the discarded Gaussian
// tail is below 1e-9; factorizes across axes
double heat_mass(const MultiplicitySetup& setup, double t, std::span<const double> x);
// int P_t(x, .) d mu through the subordination rule
double poisson_mass(const MultiplicitySetup& setup, double t, std::span<const double> x,
                    const SubordinationRule& rule = default_subordination_rule());
// sup_x-free single-point L^p integral of the Poisson kernel, n = 1
double poisson_lp_integral(const MultiplicitySetup& setup, double p, double t, double x,
                           const SubordinationRule& rule = default_subordination_rule());

struct KernelBoundReport {
    std::string regime;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::size_t count = 0;
};

// one-dimensional comparability of the heat kernel against its three
// regime comparands; samples are (t, x, y) triples, points on the
// regime boundary |xy| = t land in both neighboring regimes
std::array<KernelBoundReport, 3> check_heat_regimes(double k,
                                                    std::span<const std::array<double, 3>> txy,
                                                    bool parallel = true);
std::vector<std::array<double, 3>> make_heat_regime_samples(std::size_t per_regime,
                                                            std::uint64_t seed);

// sup of P_t(x,y) mu(B(x,t)) and, on |x| > 2n|y|, of the same value
// amplified by (1 + mu(B(x,|x|))/mu(B(x,t)))^{1+delta}
struct PoissonBoundReport {
    double sup_plain = 0.0;
    double sup_weighted = 0.0;
    std::size_t count_plain = 0;
    std::size_t count_weighted = 0;
};
PoissonBoundReport check_poisson_bounds(const MultiplicitySetup& setup,
                                        std::span<const std::array<double, 3>> txy, double delta);
std::vector<std::array<double, 3>> make_poisson_bound_samples(const MultiplicitySetup& setup,
                                                              std::size_t count,
                                                              std::uint64_t seed);

// CSV rows (t, x..., y..., kernel, comparand, ratio) for CLI reporting
std::string regime_csv(double k, std::span<const std::array<double, 3>> txy);

} // namespace dunkl::kernels
