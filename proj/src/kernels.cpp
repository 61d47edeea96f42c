#include "dunkl/kernels.hpp"
#include "dunkl/dunkl.hpp"
#include "dunkl/geometry.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/specfun.hpp"
#include "quadrule.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dunkl::kernels {

namespace {

double log_c1d(double k) { return (2.0 * k + 1.0) * std::log(2.0) + specfun::log_gamma(k + 0.5); }

void check_time(double t) {
    if (!(t > 0.0)) throw std::domain_error("kernel: time must be > 0");
}

struct Segment {
    double a, b;
};

const std::array<double, 12> kGLX{-0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
                                  -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
                                  0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
                                  0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
const std::array<double, 12> kGLW{0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
                                  0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
                                  0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
                                  0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

template <class F> double integrate_segments(const F& f, const std::vector<Segment>& segs) {
    double total = 0.0;
    for (const auto& s : segs) {
        const double c = 0.5 * (s.a + s.b), h = 0.5 * (s.b - s.a);
        double acc = 0.0;
        for (int q = 0; q < 12; ++q) acc += kGLW[std::size_t(q)] * f(c + h * kGLX[std::size_t(q)]);
        total += h * acc;
    }
    return total;
}

// panels on [0, X]: geometrically graded out of 0 (for the |y|^{2k}
// weight), then widths capped by `fine` near the kernel scale
std::vector<Segment> graded_panels(double X, double fine) {
    std::vector<Segment> segs;
    double lo = 0.0;
    double w = std::min(fine, X) / 64.0;
    while (lo < X) {
        const double hi = std::min(X, lo + w);
        segs.push_back({lo, hi});
        lo = hi;
        w = std::min(2.0 * w, fine);
    }
    return segs;
}

std::vector<Segment> symmetric_panels(double X, double fine) {
    auto pos = graded_panels(X, fine);
    std::vector<Segment> segs;
    for (const auto& s : pos) segs.push_back({-s.b, -s.a});
    segs.insert(segs.end(), pos.begin(), pos.end());
    return segs;
}

} // namespace

double log_heat_kernel_1d(double k, double t, double x, double y) {
    check_time(t);
    const double z = x * y / (2.0 * t);
    const double gap = std::abs(x) - std::abs(y);
    const double scaled = dunkl_kernel_1d_scaled(k, z, 1.0);
    return -log_c1d(k) - (k + 0.5) * std::log(t) - gap * gap / (4.0 * t) + std::log(scaled);
}

double heat_kernel_1d(double k, double t, double x, double y) {
    return std::exp(log_heat_kernel_1d(k, t, x, y));
}

double heat_kernel(const MultiplicitySetup& setup, double t, std::span<const double> x,
                   std::span<const double> y) {
    check_time(t);
    double lg = 0.0;
    for (int j = 0; j < setup.n; ++j)
        lg += log_heat_kernel_1d(setup.k[std::size_t(j)], t, x[std::size_t(j)], y[std::size_t(j)]);
    return std::exp(lg);
}

double bessel_heat_kernel_1d(double k, double t, double x, double y) {
    check_time(t);
    if (!(x > 0.0 && y > 0.0)) throw std::domain_error("bessel heat kernel: coordinates must be > 0");
    const double z = x * y / (2.0 * t);
    const double g = specfun::bessel_i_normalized_scaled(k - 0.5, z);
    return 0.5 / t * std::pow(4.0 * t, 0.5 - k) * std::exp(-(x - y) * (x - y) / (4.0 * t)) * g;
}

double bessel_heat_kernel(const MultiplicitySetup& setup, double t, std::span<const double> x,
                          std::span<const double> y) {
    double prod = 1.0;
    for (int j = 0; j < setup.n; ++j)
        prod *= bessel_heat_kernel_1d(setup.k[std::size_t(j)], t, x[std::size_t(j)], y[std::size_t(j)]);
    return prod;
}

SubordinationRule SubordinationRule::make(int panels, int nodes_per_panel, double v_max) {
    SubordinationRule r;
    r.panels = panels;
    r.v_max = v_max;
    const double pw = v_max / panels;
    const auto gl = quadrule::gauss_legendre(nodes_per_panel);
    for (int p = 0; p < panels; ++p) {
        const double c = (p + 0.5) * pw, h = 0.5 * pw;
        for (int q = 0; q < nodes_per_panel; ++q) {
            const double v = c + h * gl.x[std::size_t(q)];
            r.u.push_back(v * v);
            r.weight.push_back(2.0 / std::sqrt(M_PI) * h * gl.w[std::size_t(q)] * std::exp(-v * v));
        }
    }
    return r;
}

double SubordinationRule::mass_check() const {
    double s = 0.0;
    for (double w : weight) s += w;
    return s;
}

const SubordinationRule& default_subordination_rule() {
    static const SubordinationRule rule = SubordinationRule::make();
    return rule;
}

double poisson_kernel(const MultiplicitySetup& setup, double t, std::span<const double> x,
                      std::span<const double> y, const SubordinationRule& rule) {
    check_time(t);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.u.size(); ++i)
        s += rule.weight[i] * heat_kernel(setup, t * t / (4.0 * rule.u[i]), x, y);
    return s;
}

double resolved_heat_time(const Grid& g) {
    double t = 0.0;
    for (int j = 0; j < g.dim(); ++j) {
        const double h = g.axis(j).spacing;
        t = std::max(t, 3.2 * h * h);
    }
    return t;
}

namespace {

// contraction of the field along one axis with the matrix K[c, m]
template <class T>
void axis_contract(const Grid& g, int axis, const std::vector<double>& K, const std::vector<T>& in,
                   std::vector<T>& out, bool parallel) {
    const std::size_t M = g.axis(axis).size();
    par::for_range(g.size(), parallel, [&](std::size_t f) {
        const std::size_t c = g.axis_coord(f, axis);
        const std::size_t origin = g.shift_index(f, axis, -long(c));
        T acc{};
        for (std::size_t m = 0; m < M; ++m)
            acc += K[c * M + m] * in[g.shift_index(origin, axis, long(m))];
        out[f] = acc;
    });
}

} // namespace

SampledField heat_apply(const SampledField& f, double t, bool parallel) {
    check_time(t);
    const Grid& g = f.grid();
    std::vector<double> cur = f.values(), next(f.size());
    for (int j = 0; j < g.dim(); ++j) {
        const auto& ax = g.axis(j);
        const std::size_t M = ax.size();
        std::vector<double> K(M * M);
        par::for_range(M, parallel, [&](std::size_t c) {
            for (std::size_t m = 0; m < M; ++m)
                K[c * M + m] = heat_kernel_1d(ax.k, t, ax.nodes[c], ax.nodes[m]) * ax.weights[m];
        });
        axis_contract(g, j, K, cur, next, parallel);
        std::swap(cur, next);
    }
    return SampledField(f.grid_ptr(), std::move(cur));
}

SampledField bessel_heat_apply(const SampledField& f_even, double t) {
    check_time(t);
    const Grid& g = f_even.grid();
    for (int j = 0; j < g.dim(); ++j)
        if (g.axis(j).has_zero_node())
            throw std::invalid_argument("bessel_heat_apply: needs a staggered grid");
    std::vector<double> cur = f_even.values(), next(f_even.size());
    for (int j = 0; j < g.dim(); ++j) {
        const auto& ax = g.axis(j);
        const std::size_t M = ax.size();
        // kernel on positive nodes; even-extend across the axis
        std::vector<double> K(M * M, 0.0);
        for (std::size_t c = 0; c < M; ++c) {
            const double xc = std::abs(ax.nodes[c]);
            for (std::size_t m = 0; m < M; ++m) {
                if (ax.nodes[m] <= 0.0) continue; // integrate over (0, inf) only
                K[c * M + m] = bessel_heat_kernel_1d(ax.k, t, xc, ax.nodes[m]) * ax.weights[m];
            }
        }
        axis_contract(g, j, K, cur, next, false);
        std::swap(cur, next);
    }
    return SampledField(f_even.grid_ptr(), std::move(cur));
}

namespace {

double heat_mass_1d(double k, double t, double x0) {
    const double reach = std::sqrt(4.0 * t * 40.0) + 1.0;
    const double X = std::abs(x0) + reach;
    auto segs = symmetric_panels(X, std::max(std::sqrt(t) / 2.0, X / 64.0));
    return integrate_segments(
        [&](double y) { return heat_kernel_1d(k, t, x0, y) * std::pow(std::abs(y), 2.0 * k); },
        segs);
}

} // namespace

double heat_mass(const MultiplicitySetup& setup, double t, std::span<const double> x) {
    double prod = 1.0;
    for (int j = 0; j < setup.n; ++j) prod *= heat_mass_1d(setup.k[std::size_t(j)], t, x[std::size_t(j)]);
    return prod;
}

double poisson_mass(const MultiplicitySetup& setup, double t, std::span<const double> x,
                    const SubordinationRule& rule) {
    check_time(t);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.u.size(); ++i)
        s += rule.weight[i] * heat_mass(setup, t * t / (4.0 * rule.u[i]), x);
    return s;
}

double poisson_lp_integral(const MultiplicitySetup& setup, double p, double t, double x,
                           const SubordinationRule& rule) {
    if (setup.n != 1) throw std::invalid_argument("poisson_lp_integral: one-dimensional check");
    const double k = setup.k[0];
    const double core = std::abs(x) + 5.0 * t + 5.0;
    std::vector<Segment> segs = symmetric_panels(core, std::max(t / 2.0, core / 48.0));
    double lo = core;
    while (lo < 1e5) { // power-law tail, geometric doubling
        segs.push_back({lo, 2.0 * lo});
        segs.push_back({-2.0 * lo, -lo});
        lo *= 2.0;
    }
    const double xs[1] = {x};
    return integrate_segments(
        [&](double y) {
            const double ys[1] = {y};
            return std::pow(poisson_kernel(setup, t, xs, ys, rule), p) *
                   std::pow(std::abs(y), 2.0 * k);
        },
        segs);
}

std::array<KernelBoundReport, 3> check_heat_regimes(double k,
                                                    std::span<const std::array<double, 3>> txy,
                                                    bool parallel) {
    if (txy.empty()) throw std::invalid_argument("check_heat_regimes: empty sample set");
    std::array<KernelBoundReport, 3> rep;
    rep[0].regime = "|xy| <= t";
    rep[1].regime = "xy >= t";
    rep[2].regime = "-xy >= t";
    std::vector<std::array<double, 3>> ratios(txy.size(),
                                              {std::nan(""), std::nan(""), std::nan("")});
    par::for_range(txy.size(), parallel, [&](std::size_t i) {
        const double t = txy[i][0], x = txy[i][1], y = txy[i][2];
        const double z = x * y;
        const double lh = log_heat_kernel_1d(k, t, x, y);
        if (std::abs(z) <= t) {
            const double lc = -(k + 0.5) * std::log(t) - (x * x + y * y) / (4.0 * t);
            ratios[i][0] = std::exp(lh - lc);
        }
        if (z >= t) {
            const double lc = -0.5 * std::log(t) - k * std::log(z) - (x - y) * (x - y) / (4.0 * t);
            ratios[i][1] = std::exp(lh - lc);
        }
        if (-z >= t) {
            const double lc = 0.5 * std::log(t) - (k + 1.0) * std::log(-z) - (x + y) * (x + y) / (4.0 * t);
            ratios[i][2] = std::exp(lh - lc);
        }
    });
    for (std::size_t i = 0; i < txy.size(); ++i) {
        for (int rgm = 0; rgm < 3; ++rgm) {
            const double r = ratios[i][std::size_t(rgm)];
            if (std::isnan(r)) continue;
            auto& R = rep[std::size_t(rgm)];
            if (R.count == 0) {
                R.min_ratio = R.max_ratio = r;
            } else {
                R.min_ratio = std::min(R.min_ratio, r);
                R.max_ratio = std::max(R.max_ratio, r);
            }
            ++R.count;
        }
    }
    for (const auto& R : rep)
        if (R.count == 0) throw std::runtime_error("check_heat_regimes: regime not sampled");
    return rep;
}

std::vector<std::array<double, 3>> make_heat_regime_samples(std::size_t per_regime,
                                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<std::array<double, 3>> out;
    out.reserve(3 * per_regime);
    auto draw_t = [&] { return std::exp(std::log(0.05) + u01(rng) * std::log(5.0 / 0.05)); };
    for (std::size_t i = 0; i < per_regime; ++i) {
        // central regime |xy| <= t
        {
            const double t = draw_t();
            const double x = (2.0 * u01(rng) - 1.0) * 3.0;
            const double cap = std::min(3.0, t / std::max(std::abs(x), 1e-3));
            const double y = (2.0 * u01(rng) - 1.0) * cap;
            out.push_back({t, x, y});
        }
        // same-sign regime xy >= t, boundary point every 50th sample
        {
            const double t = draw_t();
            const double s = u01(rng) < 0.5 ? 1.0 : -1.0;
            const double a = std::exp(std::log(std::sqrt(t)) +
                                      u01(rng) * (std::log(6.0) - std::log(std::sqrt(t))));
            double b;
            if (i % 50 == 0) b = t / a; // exact regime boundary
            else b = a + u01(rng) * std::max(0.1, 6.0 - a);
            out.push_back({t, s * a, s * b});
        }
        // opposite-sign regime -xy >= t
        {
            const double t = draw_t();
            const double s = u01(rng) < 0.5 ? 1.0 : -1.0;
            const double a = std::exp(std::log(std::sqrt(t)) +
                                      u01(rng) * (std::log(6.0) - std::log(std::sqrt(t))));
            double b = (i % 50 == 0) ? t / a : std::max(t / a, a * (0.5 + u01(rng)));
            out.push_back({t, s * a, -s * b});
        }
    }
    return out;
}

PoissonBoundReport check_poisson_bounds(const MultiplicitySetup& setup,
                                        std::span<const std::array<double, 3>> txy, double delta) {
    const double N = setup.homogeneous_dim;
    if (!(delta > 0.0 && delta < 1.0 / N))
        throw std::domain_error("check_poisson_bounds: need 0 < delta < 1/N");
    if (setup.n != 1) throw std::invalid_argument("check_poisson_bounds: one-dimensional check");
    PoissonBoundReport rep;
    for (const auto& s : txy) {
        const double t = s[0], x = s[1], y = s[2];
        const double xs[1] = {x}, ys[1] = {y};
        const double P = poisson_kernel(setup, t, xs, ys);
        const double mb_t = geometry::mu_ball(setup, xs, t);
        const double plain = P * mb_t;
        rep.sup_plain = std::max(rep.sup_plain, plain);
        ++rep.count_plain;
        if (std::abs(x) > 2.0 * setup.n * std::abs(y) && x != 0.0) {
            const double mb_x = geometry::mu_ball(setup, xs, std::abs(x));
            const double w = std::pow(1.0 + mb_x / mb_t, 1.0 + delta);
            rep.sup_weighted = std::max(rep.sup_weighted, plain * w);
            ++rep.count_weighted;
        }
    }
    return rep;
}

std::vector<std::array<double, 3>> make_poisson_bound_samples(const MultiplicitySetup& setup,
                                                              std::size_t count,
                                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<std::array<double, 3>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = std::exp(std::log(0.05) + u01(rng) * std::log(20.0 / 0.05));
        double x = (2.0 * u01(rng) - 1.0) * 8.0;
        double y = (2.0 * u01(rng) - 1.0) * 8.0;
        if (i % 2 == 0) y = x / (2.0 * setup.n + 1.0) * u01(rng); // feed the far-field branch
        out.push_back({t, x, y});
    }
    return out;
}

std::string regime_csv(double k, std::span<const std::array<double, 3>> txy) {
    std::ostringstream os;
    os << "t,x,y,kernel,comparand,ratio\n";
    char buf[256];
    for (const auto& s : txy) {
        const double t = s[0], x = s[1], y = s[2];
        const double z = x * y;
        const double lh = log_heat_kernel_1d(k, t, x, y);
        double lc;
        if (std::abs(z) <= t) lc = -(k + 0.5) * std::log(t) - (x * x + y * y) / (4.0 * t);
        else if (z >= t) lc = -0.5 * std::log(t) - k * std::log(z) - (x - y) * (x - y) / (4.0 * t);
        else lc = 0.5 * std::log(t) - (k + 1.0) * std::log(-z) - (x + y) * (x + y) / (4.0 * t);
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.12g,%.12g,%.12g\n", t, x, y, std::exp(lh),
                      std::exp(lc), std::exp(lh - lc));
        os << buf;
    }
    return os.str();
}

} // namespace dunkl::kernels
