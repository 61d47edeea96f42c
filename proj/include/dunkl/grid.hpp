#pragma once

// Multiplicity data, tensor-product grids and sampled fields.
//
// A grid axis is a uniform, symmetric-about-0 node array carrying
// quadrature weights for the measure d mu_j = |y|^{2 k_j} dy.  Weights
// come from blockwise moment fitting: on each block of cells the weight
// function is integrated exactly against the local polynomial basis, so
// the measure's |y|^{2k} kink at the origin costs no accuracy.  Axes
// either contain 0 as a node (odd count) or are staggered by half a
// step so that no node sits at 0; both are exactly mirror-symmetric,
// so every reflection maps nodes to nodes.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

struct MultiplicitySetup {
    int n = 1;
    std::vector<double> k;      // one multiplicity >= 0 per axis
    double homogeneous_dim = 0; // n + 2 sum_j k_j
    double c_heat = 0;          // 2^N prod_j Gamma(k_j + 1/2)
    double c_mm = 0;            // int e^{-|x|^2/2} d mu = 2^{-N/2} c_heat

    static MultiplicitySetup make(std::vector<double> multiplicities);
    double sum_k() const;
};

struct GridAxis {
    double k = 0.0;
    double spacing = 0.0;
    bool staggered = false;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
    std::size_t mirror(std::size_t i) const { return nodes.size() - 1 - i; }
    bool has_zero_node() const { return !staggered; }
    std::size_t zero_index() const { return (nodes.size() - 1) / 2; }
};

// count odd -> node at 0; count even -> staggered half-step axis.
GridAxis make_uniform_axis(double k, double extent, std::size_t count, int block_degree = 7);

class Grid {
  public:
    Grid(MultiplicitySetup setup, std::vector<GridAxis> axes);

    const MultiplicitySetup& setup() const { return setup_; }
    int dim() const { return setup_.n; }
    const GridAxis& axis(int j) const { return axes_[std::size_t(j)]; }
    std::size_t size() const { return total_; }

    std::size_t flat(std::span<const std::size_t> idx) const;
    void unflatten(std::size_t flat, std::span<std::size_t> idx) const;
    void node(std::size_t flat, std::span<double> x) const;
    double weight(std::size_t flat) const { return node_weight_[flat]; }

    // flat index of the node obtained by flipping the sign of the listed axes
    std::size_t reflect_index(std::size_t flat, unsigned sign_bits) const;
    // neighbor along one axis (offset +-1, ...); caller guarantees validity
    std::size_t shift_index(std::size_t flat, int axis, long offset) const;
    std::size_t axis_coord(std::size_t flat, int axis) const;

    bool all_axes_symmetric() const { return true; }

  private:
    MultiplicitySetup setup_;
    std::vector<GridAxis> axes_;
    std::vector<std::size_t> stride_;
    std::vector<double> node_weight_; // product of per-axis weights
    std::size_t total_ = 0;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(MultiplicitySetup setup, double extent, std::size_t count_per_axis,
                  bool staggered = false);

template <class T> class Field {
  public:
    Field() = default;
    Field(GridPtr grid, T fill = T{}) : grid_(std::move(grid)), v_(grid_->size(), fill) {}
    Field(GridPtr grid, std::vector<T> values) : grid_(std::move(grid)), v_(std::move(values)) {}

    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    std::size_t size() const { return v_.size(); }
    T& operator[](std::size_t i) { return v_[i]; }
    const T& operator[](std::size_t i) const { return v_[i]; }
    std::vector<T>& values() { return v_; }
    const std::vector<T>& values() const { return v_; }

  private:
    GridPtr grid_;
    std::vector<T> v_;
};

using SampledField = Field<double>;

enum class SpectralDomain { space, frequency };

struct SpectralField : Field<std::complex<double>> {
    SpectralDomain domain = SpectralDomain::frequency;
    SpectralField() = default;
    SpectralField(GridPtr grid, SpectralDomain d = SpectralDomain::frequency)
        : Field<std::complex<double>>(std::move(grid)), domain(d) {}
};

SampledField sample(GridPtr grid, const std::function<double(std::span<const double>)>& f);

double integrate(const SampledField& f);
double norm_l1(const SampledField& f);
double norm_l2(const SampledField& f);
double norm_l2(const SpectralField& f);
double max_abs(const SampledField& f);

// max |f| over the outermost node shell relative to max |f|; the
// transform requires this to be below its truncation tolerance.
double boundary_ratio(const SampledField& f);

} // namespace dunkl
