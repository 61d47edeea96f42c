#pragma once

// Internal: Gauss-Legendre rules on [-1, 1] by Newton iteration on the
// Legendre polynomial.  Shared by the quadrature builders.

#include <cmath>
#include <vector>

namespace dunkl::quadrule {

struct Rule {
    std::vector<double> x, w;
};

inline Rule gauss_legendre(int n) {
    Rule r;
    r.x.assign(std::size_t(n), 0.0);
    r.w.assign(std::size_t(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int m = 2; m <= n; ++m) {
                const double p2 = ((2 * m - 1) * t * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        const double dp = n * (t * p1 - p0) / (t * t - 1.0);
        r.x[std::size_t(i)] = -t;
        r.x[std::size_t(n - 1 - i)] = t;
        r.w[std::size_t(i)] = r.w[std::size_t(n - 1 - i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return r;
}

} // namespace dunkl::quadrule
