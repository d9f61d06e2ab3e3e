#ifndef GIBBS_BESSEL_HPP
#define GIBBS_BESSEL_HPP

namespace gibbs {

/// exp(x) K2(x), evaluated by adaptive quadrature of
/// x int_0^inf exp(x (1 - cosh u)) sinh^2 u cosh u du,
/// truncated where the integrand falls below 1e-18 of its scale.
/// Relative accuracy 1e-10 for x in [1e-3, 50]. Requires x > 0.
double bessel_k2_scaled(double x);

/// K2(x); underflows to 0 for very large x (use log_bessel_k2 instead).
double bessel_k2(double x);

/// log K2(x), overflow-safe for any x > 0.
double log_bessel_k2(double x);

}  // namespace gibbs

#endif
