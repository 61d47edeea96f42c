#include "dunkl/grid.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/specfun.hpp"
#include "quadrule.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dunkl::par {

int max_threads() {
#ifdef _OPENMP
    static const int cap = [] {
        int t = omp_get_max_threads();
        if (const char* e = std::getenv("DUNKL_THREADS")) {
            const int v = std::atoi(e);
            if (v >= 1 && v < t) t = v;
        }
        return t;
    }();
    return cap;
#else
    return 1;
#endif
}

namespace detail {
void run_parallel(std::size_t n, void* ctx, void (*trampoline)(void*, std::size_t)) {
#ifdef _OPENMP
    const int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long i = 0; i < long(n); ++i) trampoline(ctx, std::size_t(i));
#else
    for (std::size_t i = 0; i < n; ++i) trampoline(ctx, i);
#endif
}
} // namespace detail

} // namespace dunkl::par

namespace dunkl {

MultiplicitySetup MultiplicitySetup::make(std::vector<double> multiplicities) {
    if (multiplicities.empty()) throw std::invalid_argument("setup: need at least one multiplicity");
    MultiplicitySetup s;
    s.n = int(multiplicities.size());
    s.k = std::move(multiplicities);
    double sk = 0.0;
    double log_prod_gamma = 0.0;
    for (double kj : s.k) {
        if (!(kj >= 0.0)) throw std::invalid_argument("setup: multiplicities must be >= 0");
        sk += kj;
        log_prod_gamma += specfun::log_gamma(kj + 0.5);
    }
    s.homogeneous_dim = s.n + 2.0 * sk;
    s.c_heat = std::exp(s.homogeneous_dim * std::log(2.0) + log_prod_gamma);
    s.c_mm = std::exp(0.5 * s.homogeneous_dim * std::log(2.0) + log_prod_gamma);
    return s;
}

double MultiplicitySetup::sum_k() const {
    double s = 0.0;
    for (double kj : k) s += kj;
    return s;
}

namespace {

// int_a^b y^j |y|^{2k} dy, exact up to rounding.
double raw_moment(double k, double a, double b, int j) {
    auto positive_part = [&](double lo, double hi) { // 0 <= lo <= hi
        const double p = j + 2.0 * k + 1.0;
        return (std::pow(hi, p) - std::pow(lo, p)) / p;
    };
    double total = 0.0;
    if (b > 0.0) total += positive_part(std::max(a, 0.0), b);
    if (a < 0.0) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        total += sign * positive_part(std::max(-b, 0.0), -a);
    }
    return total;
}

const quadrule::Rule& gl24() {
    static const quadrule::Rule rule = quadrule::gauss_legendre(24);
    return rule;
}

// Weights on the nodes of one block so that sum w_i p(y_i) equals
// int p(y) |y|^{2k} dy for every polynomial p of block degree.
void block_weights(double k, std::span<const double> y, std::vector<double>& w_out) {
    const int d = int(y.size()) - 1;
    const double a = y.front(), b = y.back();
    const double c = 0.5 * (a + b), s = 0.5 * (b - a);

    Eigen::VectorXd mu(d + 1);
    if (a <= 0.0 && b >= 0.0) {
        // kink inside or on the boundary: exact raw moments, shifted
        std::vector<double> raw(d + 1);
        for (int j = 0; j <= d; ++j) raw[std::size_t(j)] = raw_moment(k, a, b, j);
        for (int m = 0; m <= d; ++m) {
            double acc = 0.0, binom = 1.0;
            for (int j = m; j >= 0; --j) {
                acc += binom * std::pow(-c, m - j) * raw[std::size_t(j)];
                binom *= double(j) / double(m - j + 1);
            }
            mu(m) = acc / std::pow(s, m);
        }
    } else {
        // weight is analytic on the block; Gauss-Legendre in local coords
        const auto& g = gl24();
        for (int m = 0; m <= d; ++m) mu(m) = 0.0;
        for (int q = 0; q < 24; ++q) {
            const double yy = c + s * g.x[q];
            const double ww = s * g.w[q] * std::pow(std::abs(yy), 2.0 * k);
            double xi_pow = 1.0;
            const double xi = g.x[q];
            for (int m = 0; m <= d; ++m) {
                mu(m) += ww * xi_pow;
                xi_pow *= xi;
            }
        }
    }

    Eigen::MatrixXd V(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        const double xi = (y[std::size_t(i)] - c) / s;
        double p = 1.0;
        for (int m = 0; m <= d; ++m) {
            V(m, i) = p;
            p *= xi;
        }
    }
    Eigen::VectorXd w = V.partialPivLu().solve(mu);
    w_out.assign(w.data(), w.data() + d + 1);
}

} // namespace

GridAxis make_uniform_axis(double k, double extent, std::size_t count, int block_degree) {
    if (!(k >= 0.0)) throw std::invalid_argument("axis: multiplicity must be >= 0");
    if (!(extent > 0.0) || count < 4) throw std::invalid_argument("axis: bad extent/count");
    if (block_degree < 1) block_degree = 1;

    GridAxis ax;
    ax.k = k;
    ax.staggered = (count % 2 == 0);
    const std::size_t M = count;
    ax.nodes.resize(M);
    if (!ax.staggered) {
        ax.spacing = 2.0 * extent / double(M - 1);
        const double m = double((M - 1) / 2);
        for (std::size_t i = 0; i < M; ++i) ax.nodes[i] = (double(i) - m) * ax.spacing;
    } else {
        ax.spacing = 2.0 * extent / double(M);
        const double m = 0.5 * double(M - 1);
        for (std::size_t i = 0; i < M; ++i) ax.nodes[i] = (double(i) - m) * ax.spacing;
    }

    ax.weights.assign(M, 0.0);
    const std::size_t cells = M - 1;
    const int p = block_degree;

    // blocks as [first_cell, last_cell] pairs, mirror-symmetric
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    auto push_outward = [&](std::size_t first_right, std::size_t mirror_pivot) {
        // partition cells first_right..cells-1 outward; mirror each block
        std::size_t c0 = first_right;
        while (c0 < cells) {
            const std::size_t len = std::min<std::size_t>(std::size_t(p), cells - c0);
            blocks.emplace_back(c0, c0 + len - 1);
            blocks.emplace_back(mirror_pivot - (c0 + len - 1), mirror_pivot - c0);
            c0 += len;
        }
    };

    if (!ax.staggered) {
        const std::size_t zc = (M - 1) / 2; // first cell right of 0
        push_outward(zc, cells - 1);
    } else {
        std::size_t central = std::min<std::size_t>(std::size_t(p), cells);
        if (central % 2 == 0) central -= 1; // keep the block symmetric about 0
        const std::size_t cc = M / 2 - 1;  // cell containing 0
        const std::size_t half = (central - 1) / 2;
        blocks.emplace_back(cc - half, cc + half);
        push_outward(cc + half + 1, cells - 1);
    }

    std::vector<double> wb;
    for (auto [c0, c1] : blocks) {
        const std::size_t n_nodes = c1 - c0 + 2;
        block_weights(k, std::span<const double>(ax.nodes).subspan(c0, n_nodes), wb);
        for (std::size_t i = 0; i < n_nodes; ++i) ax.weights[c0 + i] += wb[i];
    }
    return ax;
}

Grid::Grid(MultiplicitySetup setup, std::vector<GridAxis> axes)
    : setup_(std::move(setup)), axes_(std::move(axes)) {
    if (axes_.size() != std::size_t(setup_.n)) throw std::invalid_argument("grid: axis count != n");
    stride_.assign(axes_.size(), 1);
    total_ = 1;
    for (std::size_t j = axes_.size(); j-- > 0;) {
        stride_[j] = total_;
        total_ *= axes_[j].size();
    }
    node_weight_.resize(total_);
    std::vector<std::size_t> idx(axes_.size());
    for (std::size_t f = 0; f < total_; ++f) {
        unflatten(f, idx);
        double w = 1.0;
        for (std::size_t j = 0; j < axes_.size(); ++j) w *= axes_[j].weights[idx[j]];
        node_weight_[f] = w;
    }
}

std::size_t Grid::flat(std::span<const std::size_t> idx) const {
    std::size_t f = 0;
    for (std::size_t j = 0; j < axes_.size(); ++j) f += idx[j] * stride_[j];
    return f;
}

void Grid::unflatten(std::size_t flat, std::span<std::size_t> idx) const {
    for (std::size_t j = 0; j < axes_.size(); ++j) {
        idx[j] = flat / stride_[j];
        flat %= stride_[j];
    }
}

void Grid::node(std::size_t flat, std::span<double> x) const {
    for (std::size_t j = 0; j < axes_.size(); ++j) {
        const std::size_t i = (flat / stride_[j]) % axes_[j].size();
        x[j] = axes_[j].nodes[i];
    }
}

std::size_t Grid::reflect_index(std::size_t flat, unsigned sign_bits) const {
    std::size_t f = 0;
    for (std::size_t j = 0; j < axes_.size(); ++j) {
        std::size_t i = (flat / stride_[j]) % axes_[j].size();
        if (sign_bits & (1u << j)) i = axes_[j].mirror(i);
        f += i * stride_[j];
    }
    return f;
}

std::size_t Grid::shift_index(std::size_t flat, int axis, long offset) const {
    return std::size_t(long(flat) + offset * long(stride_[std::size_t(axis)]));
}

std::size_t Grid::axis_coord(std::size_t flat, int axis) const {
    return (flat / stride_[std::size_t(axis)]) % axes_[std::size_t(axis)].size();
}

GridPtr make_grid(MultiplicitySetup setup, double extent, std::size_t count_per_axis,
                  bool staggered) {
    std::size_t count = count_per_axis;
    if (staggered && count % 2 == 1) ++count;
    if (!staggered && count % 2 == 0) ++count;
    std::vector<GridAxis> axes;
    axes.reserve(std::size_t(setup.n));
    for (int j = 0; j < setup.n; ++j)
        axes.push_back(make_uniform_axis(setup.k[std::size_t(j)], extent, count));
    return std::make_shared<Grid>(std::move(setup), std::move(axes));
}

SampledField sample(GridPtr grid, const std::function<double(std::span<const double>)>& f) {
    SampledField out(grid);
    std::vector<double> x(std::size_t(grid->dim()));
    for (std::size_t i = 0; i < grid->size(); ++i) {
        grid->node(i, x);
        out[i] = f(x);
    }
    return out;
}

double integrate(const SampledField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f.grid().weight(i) * f[i];
    return s;
}

double norm_l1(const SampledField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f.grid().weight(i) * std::abs(f[i]);
    return s;
}

double norm_l2(const SampledField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f.grid().weight(i) * f[i] * f[i];
    return std::sqrt(s);
}

double norm_l2(const SpectralField& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f.grid().weight(i) * std::norm(f[i]);
    return std::sqrt(s);
}

double max_abs(const SampledField& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
}

double boundary_ratio(const SampledField& f) {
    const Grid& g = f.grid();
    double inner = 0.0, outer = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        bool on_boundary = false;
        for (int j = 0; j < g.dim(); ++j) {
            const std::size_t c = g.axis_coord(i, j);
            if (c == 0 || c + 1 == g.axis(j).size()) {
                on_boundary = true;
                break;
            }
        }
        const double a = std::abs(f[i]);
        if (on_boundary) outer = std::max(outer, a);
        inner = std::max(inner, a);
    }
    return inner > 0.0 ? outer / inner : 0.0;
}

} // namespace dunkl
