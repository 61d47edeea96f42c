#pragma once

// Weighted measure of Euclidean balls, the measure-of-smallest-ball
// quasi-distance, the radius <-> measure inversion, and doubling
// diagnostics for the weighted space.

#include <cstdint>
#include <span>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl::geometry {

// mu(B(center, r)) with d mu = prod |y_j|^{2 k_j} dy.  n = 1 is the
// exact antiderivative; n >= 2 integrates ball slabs recursively with
// the endpoint square-root geometry absorbed by a sine substitution.
double mu_ball(const MultiplicitySetup& setup, std::span<const double> center, double r);

// Monte-Carlo oracle; standard error reported through *std_err.
double mu_ball_mc(const MultiplicitySetup& setup, std::span<const double> center, double r,
                  std::size_t samples, std::uint64_t seed, double* std_err = nullptr);

struct DoublingReport {
    double ratio;      // mu(B(x,R)) / mu(B(x,r))
    double lower_base; // (R/r)^n
    double upper_base; // (R/r)^N
    double c_lower;    // ratio / lower_base
    double c_upper;    // ratio / upper_base
};
DoublingReport doubling_report(const MultiplicitySetup& setup, std::span<const double> x, double r,
                               double R);

// inf over closed balls containing {x, y} of mu(B), searching centers
// on the segment [x, y] (exact in one dimension).
double quasi_distance(const MultiplicitySetup& setup, std::span<const double> x,
                      std::span<const double> y);

// cross-check for n >= 2: coarse grid search of the center over a box
// around the segment, locally refined.
double quasi_distance_boxsearch(const MultiplicitySetup& setup, std::span<const double> x,
                                std::span<const double> y, int grid_per_axis = 17);

// t with mu(B(x, sqrt(t))) = r, by monotone bisection.
double t_of_r(const MultiplicitySetup& setup, std::span<const double> x, double r);

// one-dimensional measure of the quasi-ball {y : d(x,y) < r}
double quasi_ball_measure_1d(const MultiplicitySetup& setup, double x, double r);

} // namespace dunkl::geometry
