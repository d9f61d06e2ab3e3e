#include "gibbs/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gibbs::num {

double one_minus_exp_over(double x) {
    if (x == 0.0) return 1.0;
    if (x < 1e-5) return 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
    return -std::expm1(-x) / x;
}

double expm1_over(double x) {
    if (x == 0.0) return 1.0;
    if (std::abs(x) < 1e-5) return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
    return std::expm1(x) / x;
}

double log_sinh_over(double y) {
    if (y < 0.5) {
        const double y2 = y * y;
        return std::log1p(y2 / 6.0 + y2 * y2 / 120.0 + y2 * y2 * y2 / 5040.0);
    }
    if (y > 20.0) return y - std::log(2.0 * y) + std::log1p(-std::exp(-2.0 * y));
    return std::log(std::sinh(y) / y);
}

double coth_minus_inv(double y) {
    if (y == 0.0) return 0.0;
    if (y < 0.25) {
        const double y2 = y * y;
        return y / 3.0 - y * y2 / 45.0 + 2.0 * y2 * y2 * y / 945.0 - y2 * y2 * y2 * y / 4725.0;
    }
    if (y > 20.0) return 1.0 + 2.0 * std::exp(-2.0 * y) - 1.0 / y;
    return std::cosh(y) / std::sinh(y) - 1.0 / y;
}

double g1_cos(double x) {
    // 1 - cos x = 2 sin^2(x/2), cancellation-free at every x.
    const double s = sinc(0.5 * x);
    return 0.5 * s * s;
}

double g2_sin(double x) {
    if (std::abs(x) < 0.5) {
        const double x2 = x * x;
        return 1.0 / 6.0 - x2 / 120.0 + x2 * x2 / 5040.0 - x2 * x2 * x2 / 362880.0 +
               x2 * x2 * x2 * x2 / 39916800.0 - x2 * x2 * x2 * x2 * x2 / 6227020800.0;
    }
    return (x - std::sin(x)) / (x * x * x);
}

double g3_cos(double x) {
    if (std::abs(x) < 0.5) {
        const double x2 = x * x;
        return 1.0 / 24.0 - x2 / 720.0 + x2 * x2 / 40320.0 - x2 * x2 * x2 / 3628800.0 +
               x2 * x2 * x2 * x2 / 479001600.0 - x2 * x2 * x2 * x2 * x2 / 87178291200.0;
    }
    return (x * x / 2.0 - 1.0 + std::cos(x)) / (x * x * x * x);
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// ---------------------------------------------------------------------------

namespace {

GaussRule compute_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p_deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            p_deriv = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / p_deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * p_deriv * p_deriv);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_rule(n)).first;
    return it->second;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre_rule(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + hw * rule.nodes[i]);
    return hw * sum;
}

double gauss_legendre_composite(const std::function<double(double)>& f, double a, double b,
                                int n, int panels) {
    const double w = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) sum += gauss_legendre(f, a + p * w, a + (p + 1) * w, n);
    return sum;
}

double adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                      double rel_tol, int n, int max_panels) {
    double prev = gauss_legendre_composite(f, a, b, n, 1);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        const double cur = gauss_legendre_composite(f, a, b, n, panels);
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

// ---------------------------------------------------------------------------

namespace {

double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_sf(double x, double k) { return gamma_q(k / 2.0, x / 2.0); }

// ---------------------------------------------------------------------------

double derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

double second_derivative(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h))
           / (12.0 * h * h);
}

// ---------------------------------------------------------------------------

double vdot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double vnorm(std::span<const double> a) { return std::sqrt(vdot(a, a)); }

std::vector<double> vadd(std::span<const double> a, std::span<const double> b) {
    std::vector<double> r(a.begin(), a.end());
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<double> vsub(std::span<const double> a, std::span<const double> b) {
    std::vector<double> r(a.begin(), a.end());
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

std::vector<double> vscale(double s, std::span<const double> a) {
    std::vector<double> r(a.begin(), a.end());
    for (double& v : r) v *= s;
    return r;
}

std::vector<double> vaxpy(std::span<const double> a, double s, std::span<const double> b) {
    std::vector<double> r(a.begin(), a.end());
    for (size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

}  // namespace gibbs::num
