#include "dunkl/geometry.hpp"
#include "quadrule.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dunkl::geometry {

namespace {

// antiderivative of |y|^{2k}
double measure_primitive(double k, double y) {
    const double p = 2.0 * k + 1.0;
    return (y >= 0.0 ? 1.0 : -1.0) * std::pow(std::abs(y), p) / p;
}

double mu_interval(double k, double a, double b) {
    return measure_primitive(k, b) - measure_primitive(k, a);
}

const quadrule::Rule& gl48() {
    static const quadrule::Rule r = quadrule::gauss_legendre(48);
    return r;
}

// Recursive slab integration over the ball: the first remaining axis is
// parametrized as y = c + r sin(theta), which makes the cross-section
// radius r cos(theta) smooth at the poles.  The integration range is
// split where y crosses 0 so the |y|^{2k} kink sits on a panel edge.
double mu_ball_rec(std::span<const double> k, std::span<const double> center, double r);

double cross_section(std::span<const double> k, std::span<const double> center, double rho) {
    if (k.size() == 1) return mu_interval(k[0], center[0] - rho, center[0] + rho);
    return mu_ball_rec(k, center, rho);
}

double mu_ball_rec(std::span<const double> k, std::span<const double> center, double r) {
    const double c0 = center[0];
    std::vector<double> thetas{-0.5 * M_PI, 0.5 * M_PI};
    if (std::abs(c0) < r) thetas.insert(thetas.begin() + 1, std::asin(-c0 / r));
    const auto& g = gl48();
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < thetas.size(); ++s) {
        const double mid = 0.5 * (thetas[s] + thetas[s + 1]);
        const double half = 0.5 * (thetas[s + 1] - thetas[s]);
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            const double th = mid + half * g.x[q];
            const double y = c0 + r * std::sin(th);
            const double rho = r * std::cos(th);
            const double dy = r * std::cos(th); // dy/dtheta
            total += half * g.w[q] * std::pow(std::abs(y), 2.0 * k[0]) * dy *
                     cross_section(k.subspan(1), center.subspan(1), rho);
        }
    }
    return total;
}

} // namespace

double mu_ball(const MultiplicitySetup& setup, std::span<const double> center, double r) {
    if (!(r > 0.0)) {
        if (r == 0.0) return 0.0;
        throw std::domain_error("mu_ball: radius must be > 0");
    }
    if (setup.n == 1) return mu_interval(setup.k[0], center[0] - r, center[0] + r);
    return mu_ball_rec(setup.k, center, r);
}

double mu_ball_mc(const MultiplicitySetup& setup, std::span<const double> center, double r,
                  std::size_t samples, std::uint64_t seed, double* std_err) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = setup.n;
    double cube = 1.0;
    for (int j = 0; j < n; ++j) cube *= 2.0 * r;
    double sum = 0.0, sum2 = 0.0;
    std::vector<double> y(std::size_t(n), 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        double rr = 0.0;
        for (int j = 0; j < n; ++j) {
            const double d = r * u(rng);
            y[std::size_t(j)] = center[std::size_t(j)] + d;
            rr += d * d;
        }
        double v = 0.0;
        if (rr <= r * r) {
            v = 1.0;
            for (int j = 0; j < n; ++j)
                v *= std::pow(std::abs(y[std::size_t(j)]), 2.0 * setup.k[std::size_t(j)]);
        }
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / double(samples);
    if (std_err) {
        const double var = std::max(0.0, sum2 / double(samples) - mean * mean);
        *std_err = cube * std::sqrt(var / double(samples));
    }
    return cube * mean;
}

DoublingReport doubling_report(const MultiplicitySetup& setup, std::span<const double> x, double r,
                               double R) {
    if (!(R >= r && r > 0.0)) throw std::domain_error("doubling_report: need R >= r > 0");
    DoublingReport rep;
    rep.ratio = mu_ball(setup, x, R) / mu_ball(setup, x, r);
    rep.lower_base = std::pow(R / r, double(setup.n));
    rep.upper_base = std::pow(R / r, setup.homogeneous_dim);
    rep.c_lower = rep.ratio / rep.lower_base;
    rep.c_upper = rep.ratio / rep.upper_base;
    return rep;
}

namespace {

double covering_measure(const MultiplicitySetup& setup, std::span<const double> x,
                        std::span<const double> y, double s) {
    const std::size_t n = std::size_t(setup.n);
    std::vector<double> c(n);
    double dx = 0.0, dy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = x[j] + s * (y[j] - x[j]);
        dx += (c[j] - x[j]) * (c[j] - x[j]);
        dy += (c[j] - y[j]) * (c[j] - y[j]);
    }
    const double r = std::sqrt(std::max(dx, dy));
    if (r == 0.0) return 0.0;
    return mu_ball(setup, c, r);
}

} // namespace

double quasi_distance(const MultiplicitySetup& setup, std::span<const double> x,
                      std::span<const double> y) {
    double d2 = 0.0;
    for (int j = 0; j < setup.n; ++j) {
        const double d = x[std::size_t(j)] - y[std::size_t(j)];
        d2 += d * d;
    }
    if (d2 == 0.0) return 0.0;

    // coarse scan of the segment parameter, then golden-section refine
    const int S = 65;
    double best_s = 0.5, best = covering_measure(setup, x, y, 0.5);
    for (int i = 0; i <= S; ++i) {
        const double s = double(i) / double(S);
        const double v = covering_measure(setup, x, y, s);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    double lo = std::max(0.0, best_s - 1.5 / double(S));
    double hi = std::min(1.0, best_s + 1.5 / double(S));
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    double fa = covering_measure(setup, x, y, a), fb = covering_measure(setup, x, y, b);
    for (int it = 0; it < 80; ++it) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - phi * (hi - lo);
            fa = covering_measure(setup, x, y, a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + phi * (hi - lo);
            fb = covering_measure(setup, x, y, b);
        }
        if (hi - lo < 1e-12) break;
    }
    return std::min({best, fa, fb});
}

double quasi_distance_boxsearch(const MultiplicitySetup& setup, std::span<const double> x,
                                std::span<const double> y, int grid_per_axis) {
    const std::size_t n = std::size_t(setup.n);
    std::vector<double> lo(n), hi(n), c(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = std::min(x[j], y[j]), b = std::max(x[j], y[j]);
        const double pad = 0.5 * (b - a) + 1e-6;
        lo[j] = a - pad;
        hi[j] = b + pad;
    }
    auto value = [&](const std::vector<double>& cc) {
        double dx = 0.0, dy = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            dx += (cc[j] - x[j]) * (cc[j] - x[j]);
            dy += (cc[j] - y[j]) * (cc[j] - y[j]);
        }
        const double r = std::sqrt(std::max(dx, dy));
        return r == 0.0 ? 0.0 : mu_ball(setup, cc, r);
    };
    double best = -1.0;
    std::vector<double> best_c(n);
    for (int level = 0; level < 3; ++level) {
        std::vector<std::size_t> idx(n, 0);
        const std::size_t total = [&] {
            std::size_t t = 1;
            for (std::size_t j = 0; j < n; ++j) t *= std::size_t(grid_per_axis);
            return t;
        }();
        for (std::size_t f = 0; f < total; ++f) {
            std::size_t rem = f;
            for (std::size_t j = 0; j < n; ++j) {
                idx[j] = rem % std::size_t(grid_per_axis);
                rem /= std::size_t(grid_per_axis);
                c[j] = lo[j] + (hi[j] - lo[j]) * double(idx[j]) / double(grid_per_axis - 1);
            }
            const double v = value(c);
            if (best < 0.0 || v < best) {
                best = v;
                best_c = c;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double w = (hi[j] - lo[j]) / double(grid_per_axis - 1);
            lo[j] = best_c[j] - 1.5 * w;
            hi[j] = best_c[j] + 1.5 * w;
        }
    }
    return best;
}

double t_of_r(const MultiplicitySetup& setup, std::span<const double> x, double r) {
    if (!(r > 0.0)) throw std::domain_error("t_of_r: r must be > 0");
    auto mu_sqrt = [&](double s) { return mu_ball(setup, x, std::sqrt(s)); };
    double lo = 1.0, hi = 1.0;
    while (mu_sqrt(lo) > r) lo *= 0.25;
    while (mu_sqrt(hi) < r) hi *= 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mu_sqrt(mid) < r) lo = mid;
        else hi = mid;
        if (std::abs(mu_sqrt(mid) - r) <= 1e-9 * r) break;
    }
    return 0.5 * (lo + hi);
}

double quasi_ball_measure_1d(const MultiplicitySetup& setup, double x, double r) {
    // d(x, .) is monotone along each half-line from x; find both
    // boundary points by bisection
    auto dist = [&](double y) {
        const double xs[1] = {x}, ys[1] = {y};
        return quasi_distance(setup, xs, ys);
    };
    auto boundary = [&](double dir) {
        double step = 1.0;
        while (dist(x + dir * step) < r) step *= 2.0;
        double lo = 0.0, hi = step;
        for (int it = 0; it < 100; ++it) {
            const double m = 0.5 * (lo + hi);
            if (dist(x + dir * m) < r) lo = m;
            else hi = m;
        }
        return x + dir * 0.5 * (lo + hi);
    };
    const double yl = boundary(-1.0), yr = boundary(+1.0);
    return mu_interval(setup.k[0], yl, yr);
}

} // namespace dunkl::geometry
