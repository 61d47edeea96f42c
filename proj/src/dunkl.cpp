#include "dunkl/dunkl.hpp"
#include "dunkl/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace dunkl {

std::vector<SignVector> group_elements(int n) {
    std::vector<SignVector> g;
    g.reserve(1u << n);
    for (unsigned b = 0; b < (1u << n); ++b) g.push_back({b, n});
    return g;
}

std::vector<std::vector<double>> orbit(const MultiplicitySetup& setup, std::span<const double> x) {
    std::vector<std::vector<double>> pts;
    for (const auto& s : group_elements(setup.n)) {
        std::vector<double> y(x.begin(), x.end());
        s.apply(y);
        pts.push_back(std::move(y));
    }
    return pts;
}

double dunkl_kernel_1d_scaled(double k, double x, double y) {
    if (!(k >= 0.0)) throw std::domain_error("dunkl_kernel: multiplicity must be >= 0");
    const double z = x * y;
    if (z == 0.0) return 1.0; // normalization, exact
    if (k == 0.0) return z >= 0.0 ? 1.0 : std::exp(2.0 * z);
    const double az = std::abs(z);
    const double ga = specfun::bessel_i_normalized_scaled(k - 0.5, az);
    const double gb = specfun::bessel_i_normalized_scaled(k + 0.5, az);
    return std::exp(specfun::log_gamma(k + 0.5)) * (ga + 0.5 * z * gb);
}

double dunkl_kernel_1d(double k, double x, double y) {
    const double z = x * y;
    if (z == 0.0) return 1.0;
    if (k == 0.0) return std::exp(z);
    const double s = dunkl_kernel_1d_scaled(k, x, y);
    return std::exp(std::log(s) + std::abs(z));
}

double dunkl_kernel(const MultiplicitySetup& setup, std::span<const double> x,
                    std::span<const double> y) {
    double prod = 1.0;
    for (int j = 0; j < setup.n; ++j)
        prod *= dunkl_kernel_1d(setup.k[std::size_t(j)], x[std::size_t(j)], y[std::size_t(j)]);
    return prod;
}

double dunkl_kernel_1d_quadrature(double k, double x, double y, int nodes) {
    if (!(k > 0.0)) throw std::domain_error("quadrature route requires k > 0");
    const double z = x * y;
    if (nodes <= 0) nodes = std::min(600, 48 + int(std::ceil(std::abs(z))));

    // Gauss-Jacobi rule for (1-u)^{k-1} (1+u)^k on [-1,1] via the
    // symmetric tridiagonal recurrence matrix.  With the rule weights
    // normalized to total mass one, E_k(x,y) = sum w_i e^{z u_i}: the
    // Beta-prefactor of the integral representation cancels exactly.
    const double alpha = k - 1.0, beta = k;
    const int m = nodes;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    const double ab = alpha + beta;
    T(0, 0) = (beta - alpha) / (ab + 2.0);
    for (int i = 1; i < m; ++i) {
        const double ii = double(i);
        T(i, i) = (beta * beta - alpha * alpha) / ((2.0 * ii + ab) * (2.0 * ii + ab + 2.0));
        double b2;
        if (i == 1) {
            b2 = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            b2 = 4.0 * ii * (ii + alpha) * (ii + beta) * (ii + ab) /
                 ((2.0 * ii + ab) * (2.0 * ii + ab) * (2.0 * ii + ab + 1.0) * (2.0 * ii + ab - 1.0));
        }
        T(i, i - 1) = T(i - 1, i) = std::sqrt(b2);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    const auto& u = es.eigenvalues();
    const auto& V = es.eigenvectors();
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const double w = V(0, i) * V(0, i);
        sum += w * std::exp(z * u(i));
    }
    return sum;
}

double dunkl_cosine(double k, double z) {
    if (k == 0.0) return std::cos(z);
    return std::exp(specfun::log_gamma(k + 0.5)) * specfun::bessel_j_normalized(k - 0.5, std::abs(z));
}

double dunkl_sine(double k, double z) {
    if (k == 0.0) return std::sin(z);
    return std::exp(specfun::log_gamma(k + 0.5)) * 0.5 * z *
           specfun::bessel_j_normalized(k + 0.5, std::abs(z));
}

std::complex<double> dunkl_plane_wave_1d(double k, double z) {
    return {dunkl_cosine(k, z), dunkl_sine(k, z)};
}

namespace {

void require_symmetric(const Grid& g, int axis) {
    const auto& ax = g.axis(axis);
    for (std::size_t i = 0; i < ax.size(); ++i)
        if (ax.nodes[ax.mirror(i)] != -ax.nodes[i])
            throw std::invalid_argument("operator: axis not symmetric about 0");
}

// second-order first derivative along one axis at flat index i
double d1(const SampledField& f, int axis, std::size_t i) {
    const Grid& g = f.grid();
    const auto& ax = g.axis(axis);
    const double h = ax.spacing;
    const std::size_t c = g.axis_coord(i, axis), M = ax.size();
    if (c > 0 && c + 1 < M)
        return (f[g.shift_index(i, axis, +1)] - f[g.shift_index(i, axis, -1)]) / (2.0 * h);
    if (c == 0)
        return (-3.0 * f[i] + 4.0 * f[g.shift_index(i, axis, +1)] - f[g.shift_index(i, axis, +2)]) /
               (2.0 * h);
    return (3.0 * f[i] - 4.0 * f[g.shift_index(i, axis, -1)] + f[g.shift_index(i, axis, -2)]) /
           (2.0 * h);
}

// fourth-order central first derivative; the 1/x_j coefficient in the
// Laplacian amplifies stencil error near the axis, so the second-order
// formula is not enough there
double d1_4(const SampledField& f, int axis, std::size_t i) {
    const Grid& g = f.grid();
    const auto& ax = g.axis(axis);
    const double h = ax.spacing;
    const std::size_t c = g.axis_coord(i, axis), M = ax.size();
    if (c >= 2 && c + 2 < M) {
        return (-f[g.shift_index(i, axis, +2)] + 8.0 * f[g.shift_index(i, axis, +1)] -
                8.0 * f[g.shift_index(i, axis, -1)] + f[g.shift_index(i, axis, -2)]) /
               (12.0 * h);
    }
    return d1(f, axis, i);
}

double d2(const SampledField& f, int axis, std::size_t i) {
    const Grid& g = f.grid();
    const auto& ax = g.axis(axis);
    const double h2 = ax.spacing * ax.spacing;
    const std::size_t c = g.axis_coord(i, axis), M = ax.size();
    if (c > 0 && c + 1 < M)
        return (f[g.shift_index(i, axis, +1)] - 2.0 * f[i] + f[g.shift_index(i, axis, -1)]) / h2;
    if (c == 0)
        return (2.0 * f[i] - 5.0 * f[g.shift_index(i, axis, +1)] +
                4.0 * f[g.shift_index(i, axis, +2)] - f[g.shift_index(i, axis, +3)]) /
               h2;
    return (2.0 * f[i] - 5.0 * f[g.shift_index(i, axis, -1)] + 4.0 * f[g.shift_index(i, axis, -2)] -
            f[g.shift_index(i, axis, -3)]) /
           h2;
}

} // namespace

SampledField apply_dunkl_operator(const SampledField& f, int axis) {
    const Grid& g = f.grid();
    require_symmetric(g, axis);
    const double k = g.setup().k[std::size_t(axis)];
    SampledField out(f.grid_ptr());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double deriv = d1(f, axis, i);
        const std::size_t c = g.axis_coord(i, axis);
        const double x = g.axis(axis).nodes[c];
        double refl;
        if (x == 0.0) {
            refl = 2.0 * k * deriv; // removable singularity limit
        } else {
            refl = (k / x) * (f[i] - f[g.reflect_index(i, 1u << axis)]);
        }
        out[i] = deriv + refl;
    }
    return out;
}

SampledField apply_dunkl_laplacian(const SampledField& f) {
    const Grid& g = f.grid();
    SampledField out(f.grid_ptr());
    for (int j = 0; j < g.dim(); ++j) {
        require_symmetric(g, j);
        const double k = g.setup().k[std::size_t(j)];
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double second = d2(f, j, i);
            const std::size_t c = g.axis_coord(i, j);
            const double x = g.axis(j).nodes[c];
            if (x == 0.0) {
                out[i] += (1.0 + 2.0 * k) * second;
            } else {
                const double first = d1_4(f, j, i);
                const double refl = f[i] - f[g.reflect_index(i, 1u << j)];
                out[i] += second + (2.0 * k / x) * first - (k / (x * x)) * refl;
            }
        }
    }
    return out;
}

SampledField reflect_field(const SampledField& f, const SignVector& sigma) {
    const Grid& g = f.grid();
    SampledField out(f.grid_ptr());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g.reflect_index(i, sigma.bits)];
    return out;
}

} // namespace dunkl
