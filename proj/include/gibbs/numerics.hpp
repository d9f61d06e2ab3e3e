#ifndef GIBBS_NUMERICS_HPP
#define GIBBS_NUMERICS_HPP

#include <functional>
#include <span>
#include <vector>

namespace gibbs::num {

// ---------------------------------------------------------------------------
// Cancellation-safe scalar primitives.
// ---------------------------------------------------------------------------

/// (1 - exp(-x)) / x for x >= 0, series below 1e-5, limit 1 at x = 0.
double one_minus_exp_over(double x);

/// (exp(x) - 1) / x with the limit 1 at x = 0.
double expm1_over(double x);

/// log(sinh(y) / y) for y >= 0; overflow-safe for large y.
double log_sinh_over(double y);

/// coth(y) - 1/y for y >= 0; vanishes at y = 0, overflow-safe for large y.
double coth_minus_inv(double y);

/// (1 - cos x) / x^2, limit 1/2.
double g1_cos(double x);
/// (x - sin x) / x^3, limit 1/6.
double g2_sin(double x);
/// (x^2/2 - 1 + cos x) / x^4, limit 1/24.
double g3_cos(double x);
/// sin(x) / x, limit 1.
double sinc(double x);

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature.
// ---------------------------------------------------------------------------

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule (cached).
const GaussRule& gauss_legendre_rule(int n);

/// Integral of f over [a, b] with an n-point rule.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n);

/// Composite rule: [a, b] split into `panels` equal panels, n points each.
double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b,
                                int n, int panels);

/// Panel-doubling composite integration until |I_2k - I_k| <= rel_tol * |I_2k|.
double adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-13, int n = 32, int max_panels = 512);

// ---------------------------------------------------------------------------
// Special functions.
// ---------------------------------------------------------------------------

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Survival function of the chi-square law with k degrees of freedom.
double chi_square_sf(double x, double k);

// ---------------------------------------------------------------------------
// Finite differences (central, 4th order).
// ---------------------------------------------------------------------------

double derivative(const std::function<double(double)>& f, double x, double h);

/// Second derivative from the 5-point central stencil (4th order).
double second_derivative(const std::function<double(double)>& f, double x, double h);

// ---------------------------------------------------------------------------
// Small dense vectors (parameter-space elements).
// ---------------------------------------------------------------------------

double vdot(std::span<const double> a, std::span<const double> b);
double vnorm(std::span<const double> a);
std::vector<double> vadd(std::span<const double> a, std::span<const double> b);
std::vector<double> vsub(std::span<const double> a, std::span<const double> b);
std::vector<double> vscale(double s, std::span<const double> a);
/// a + s * b
std::vector<double> vaxpy(std::span<const double> a, double s, std::span<const double> b);

}  // namespace gibbs::num

#endif
