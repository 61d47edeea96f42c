#pragma once

// Scalar special functions used by every kernel in the library:
// modified Bessel I_nu for orders nu >= -1/2, the Bessel J companion
// needed on the imaginary axis, and log-Gamma.
//
// Every I-routine is backed by one core evaluation that returns
// log I_nu(x), so callers can reattach exponentials analytically and
// never overflow: the scaled form e^{-x} I_nu(x) stays finite for
// x up to 1e6 and beyond.

namespace dunkl::specfun {

// ln Gamma(x), x > 0.  Throws std::domain_error for x <= 0.
double log_gamma(double x);

// I_nu(x) for nu >= -1/2, x >= 0.  Overflows to +inf for x beyond ~709.
double bessel_i(double nu, double x);

// e^{-x} I_nu(x); finite for arbitrarily large x.
double bessel_i_scaled(double nu, double x);

// ln I_nu(x); -inf when I_nu(x) = 0 (x = 0, nu > 0).
double log_bessel_i(double nu, double x);

// (x/2)^{-nu} I_nu(x): entire in x, positive, equal to 1/Gamma(nu+1) at 0.
double bessel_i_normalized(double nu, double x);

// e^{-x} (x/2)^{-nu} I_nu(x).
double bessel_i_normalized_scaled(double nu, double x);

// J_nu(x) for nu >= -1/2, x >= 0.
double bessel_j(double nu, double x);

// (x/2)^{-nu} J_nu(x): entire, even in x, equal to 1/Gamma(nu+1) at 0.
double bessel_j_normalized(double nu, double x);

namespace detail {

// Regime implementations, exposed so the crossover can be tested by
// overlap-region agreement.  i_series works for every (nu, x); the
// asymptotic forms require x >= i_asymptotic_threshold(nu) resp.
// j_asymptotic_threshold(nu).
double bessel_i_series_log(double nu, double x);
double bessel_i_asymptotic_scaled_log(double nu, double x);
double bessel_j_series_normalized(double nu, double x);
double bessel_j_asymptotic(double nu, double x);
double i_asymptotic_threshold(double nu);
double j_asymptotic_threshold(double nu);

} // namespace detail

} // namespace dunkl::specfun
