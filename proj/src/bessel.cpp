#include "gibbs/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "gibbs/numerics.hpp"

namespace gibbs {

namespace {

// Truncation point: x (cosh u - 1) - 3u >= 43 guarantees the scaled integrand
// sinh^2 u cosh u exp(x (1 - cosh u)) is below ~1e-18 of its small-u scale.
double truncation_point(double x) {
    double u = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double target = (43.0 + 3.0 * u) / x;
        const double next = std::acosh(1.0 + target);
        if (std::abs(next - u) < 1e-12) return next;
        u = next;
    }
    return u;
}

}  // namespace

double bessel_k2_scaled(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k2: requires x > 0");
    const double umax = truncation_point(x);
    const auto integrand = [x](double u) {
        const double sh = std::sinh(u);
        const double ch = std::cosh(u);
        return std::exp(x * (1.0 - ch)) * sh * sh * ch;
    };
    return x * num::adaptive_gauss(integrand, 0.0, umax, 1e-13, 32, 1024);
}

double bessel_k2(double x) { return std::exp(-x) * bessel_k2_scaled(x); }

double log_bessel_k2(double x) { return std::log(bessel_k2_scaled(x)) - x; }

}  // namespace gibbs
