#pragma once

// The one-dimensional kernel E_k(x,y), its tensor product, the
// associated plane wave E_k(x, i xi), the first-order
// differential-reflection operators and their Laplacian on sampled
// fields, and the sign-flip orbit machinery of the reflection group.

#include <complex>
#include <span>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl {

// Element of the sign-change group: bit j set <=> axis j is flipped.
struct SignVector {
    unsigned bits = 0;
    int n = 1;

    double sign(int j) const { return (bits >> j) & 1u ? -1.0 : 1.0; }
    SignVector compose(const SignVector& o) const { return {bits ^ o.bits, n}; }
    bool identity() const { return bits == 0; }
    void apply(std::span<double> x) const {
        for (int j = 0; j < n; ++j) x[std::size_t(j)] *= sign(j);
    }
};

std::vector<SignVector> group_elements(int n); // all 2^n of them
std::vector<std::vector<double>> orbit(const MultiplicitySetup& setup, std::span<const double> x);

// E_k(x,y) through the Bessel-function representation; positive,
// symmetric, E_k(x,0) = 1, and e^{xy} when k = 0.
double dunkl_kernel_1d(double k, double x, double y);
// e^{-|xy|} E_k(x,y): bounded by 1, safe for large arguments.
double dunkl_kernel_1d_scaled(double k, double x, double y);

// Independent route: Gauss-Jacobi quadrature of the Beta-type integral
// representation of E_k.  Requires k > 0; node count 0 picks a default
// that grows with |xy|.
double dunkl_kernel_1d_quadrature(double k, double x, double y, int nodes = 0);

double dunkl_kernel(const MultiplicitySetup& setup, std::span<const double> x,
                    std::span<const double> y);

// Generalized cosine/sine pair: E_k(x, i xi) = cosine + i sine with
// argument z = x xi.  For k = 0 these are cos and sin.
double dunkl_cosine(double k, double z);
double dunkl_sine(double k, double z);
std::complex<double> dunkl_plane_wave_1d(double k, double z); // E_k at (x, i xi), z = x xi

// D_j f = d/dx_j f + (k_j / x_j) (f - f o sigma_j), second-order
// central differences for the derivative, exact mirrored nodes for the
// reflection part; at a node with x_j = 0 the reflection term is the
// limit 2 k_j d/dx_j f.
SampledField apply_dunkl_operator(const SampledField& f, int axis);

// Sum over axes of d^2/dx_j^2 + (2 k_j / x_j) d/dx_j
//                 - (k_j / x_j^2)(f - f o sigma_j).
SampledField apply_dunkl_laplacian(const SampledField& f);

SampledField reflect_field(const SampledField& f, const SignVector& sigma);

} // namespace dunkl
