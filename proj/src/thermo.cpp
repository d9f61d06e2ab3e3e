#include "gibbs/thermo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gibbs/numerics.hpp"

namespace gibbs {

AlgVec to_alg(double b) { return {b}; }

AlgVec to_alg(const Vec3& b) { return {b.x, b.y, b.z}; }

AlgVec to_alg(const GalileanAlgebraElement& b) {
    return {b.omega.x, b.omega.y, b.omega.z, b.beta.x,  b.beta.y,
            b.beta.z,  b.delta.x, b.delta.y, b.delta.z, b.epsilon};
}

Vec3 vec3_from_alg(const AlgVec& v) {
    if (v.size() != 3) throw std::invalid_argument("vec3_from_alg: size 3 expected");
    return {v[0], v[1], v[2]};
}

GalileanAlgebraElement galilean_from_alg(const AlgVec& v) {
    if (v.size() != 10) throw std::invalid_argument("galilean_from_alg: size 10 expected");
    GalileanAlgebraElement x;
    x.omega = {v[0], v[1], v[2]};
    x.beta = {v[3], v[4], v[5]};
    x.delta = {v[6], v[7], v[8]};
    x.epsilon = v[9];
    return x;
}

namespace {

void require_admissible(const ThermoModel& model, const AlgVec& b) {
    if (static_cast<int>(b.size()) != model.dim_b)
        throw std::invalid_argument(model.name + ": parameter dimension mismatch");
    if (model.admissible) {
        const AdmissibilityResult res = model.admissible(b);
        if (!res.admissible) throw AdmissibilityError(model.name + ": " + res.reason);
    }
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

Estimate log_partition_estimate(const ThermoModel& model, const AlgVec& b,
                                const McBudget& budget) {
    require_admissible(model, b);
    if (!model.domain_for || !model.coupling)
        throw UnsupportedModelError(model.name + ": no integration domain for the oracle");
    const Domain domain = model.domain_for(b);
    const auto f = [&](std::span<const double> z) { return std::exp(-model.coupling(z, b)); };
    Estimate est = mc_integrate(domain, f, budget.n, budget.seed);
    if (!(est.value > 0.0) || est.std_error > 0.5 * est.value)
        throw EstimationError(model.name + ": partition estimate did not converge",
                              est.std_error);
    return est;
}

double log_partition(const ThermoModel& model, const AlgVec& b, const McBudget& budget) {
    require_admissible(model, b);
    double lp;
    if (model.closed_form_log_partition) {
        lp = model.closed_form_log_partition(b);
    } else {
        lp = std::log(log_partition_estimate(model, b, budget).value);
    }
    if (model.extensive_entropy) lp -= log_factorial(model.n_particles);
    return lp;
}

double log_partition(const ThermoModel& model, double b, const McBudget& budget) {
    return log_partition(model, to_alg(b), budget);
}

AlgVec mean_momentum(const ThermoModel& model, const AlgVec& b, const McBudget& budget) {
    require_admissible(model, b);
    if (model.closed_form_mean) return model.closed_form_mean(b);

    const double h = std::max(1e-5 * num::vnorm(b), 1e-7);
    AlgVec grad(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        AlgVec probe = b;
        const auto f = [&](double t) {
            probe[i] = t;
            return log_partition(model, probe, budget);
        };
        grad[i] = -num::derivative(f, b[i], h);
    }
    return grad;
}

double mean_energy(const ThermoModel& model, double b, const McBudget& budget) {
    return mean_momentum(model, to_alg(b), budget)[0];
}

double entropy(const ThermoModel& model, const AlgVec& b, const McBudget& budget) {
    const AlgVec mean = mean_momentum(model, b, budget);
    return log_partition(model, b, budget) + num::vdot(mean, b);
}

double entropy(const ThermoModel& model, double b, const McBudget& budget) {
    return entropy(model, to_alg(b), budget);
}

double covariance_form(const ThermoModel& model, const AlgVec& b, const AlgVec& y,
                       const AlgVec& z, const McBudget& budget) {
    require_admissible(model, b);
    const double scale = std::max(num::vnorm(b), 1.0);

    if (model.closed_form_mean) {
        // Directional derivative of the analytic mean, symmetrized.
        const double h = std::max(1e-5 * num::vnorm(b), 1e-7);
        const auto dir = [&](const AlgVec& u, const AlgVec& w) {
            const auto f = [&](double s) {
                return num::vdot(mean_momentum(model, num::vaxpy(b, s, u), budget), w);
            };
            return num::derivative(f, 0.0, h);
        };
        return 0.5 * (dir(y, z) + dir(z, y));
    }

    // Mixed second difference of log P; second order, step sized for the
    // noise floor of nested differences.
    const double h = std::max(1e-4 * scale, 1e-5);
    const auto lp = [&](double s, double t) {
        AlgVec probe = b;
        for (size_t i = 0; i < b.size(); ++i) probe[i] += s * y[i] + t * z[i];
        return log_partition(model, probe, budget);
    };
    const double mixed =
        (lp(h, h) - lp(h, -h) - lp(-h, h) + lp(-h, -h)) / (4.0 * h * h);
    return -mixed;
}

AlgVec theta_b(const ThermoModel& model, const AlgVec& b, const AlgVec& x,
               const McBudget& budget) {
    require_admissible(model, b);
    if (!model.cocycle_theta || !model.ad_star)
        throw UnsupportedModelError(model.name + ": theta_b needs a cocycle and ad*");
    const AlgVec mean = mean_momentum(model, b, budget);
    return num::vsub(model.cocycle_theta(x), model.ad_star(x, mean));
}

double gamma_form(const ThermoModel& model, const AlgVec& b, const AlgVec& x1,
                  const AlgVec& y1, const McBudget& budget) {
    if (!model.bracket)
        throw UnsupportedModelError(model.name + ": gamma_form needs a Lie bracket");
    return num::vdot(theta_b(model, b, x1, budget), model.bracket(y1, b));
}

double equilibrate(const ThermoModel& model_a, const ThermoModel& model_b, double b_a,
                   double b_b) {
    if (model_a.dim_b != 1 || model_b.dim_b != 1)
        throw UnsupportedModelError("equilibrate: scalar-parameter models only");
    require_admissible(model_a, to_alg(b_a));
    require_admissible(model_b, to_alg(b_b));
    if (b_a == b_b) return b_a;

    const double target = mean_energy(model_a, b_a) + mean_energy(model_b, b_b);
    const auto residual = [&](double b) {
        return mean_energy(model_a, b) + mean_energy(model_b, b) - target;
    };

    double lo = std::min(b_a, b_b), hi = std::max(b_a, b_b);
    // E is strictly decreasing in b, so the residual brackets the root.
    if (residual(lo) < 0.0 || residual(hi) > 0.0)
        throw std::runtime_error("equilibrate: energy is not monotone on the bracket");
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double r = residual(mid);
        if (std::abs(r) <= 1e-12 * std::abs(target)) break;
        if (r > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(residual(mid)) > 1e-10 * std::abs(target))
        throw std::runtime_error("equilibrate: bisection failed to settle the energy balance");
    return mid;
}

double grid_entropy(std::span<const double> density_values, double cell_volume) {
    if (!(cell_volume > 0.0)) throw std::invalid_argument("grid_entropy: cell volume > 0");
    double mass = 0.0;
    for (double rho : density_values) {
        if (rho < 0.0) throw std::invalid_argument("grid_entropy: negative density value");
        mass += rho * cell_volume;
    }
    if (std::abs(mass - 1.0) > 1e-6)
        throw std::invalid_argument("grid_entropy: density is not normalized");
    double s = 0.0;
    for (double rho : density_values)
        if (rho > 0.0) s -= rho * std::log(rho) * cell_volume;
    return s;
}

ThermoModel shift_momentum(const ThermoModel& model, const AlgVec& mu) {
    if (static_cast<int>(mu.size()) != model.dim_b)
        throw std::invalid_argument("shift_momentum: offset dimension mismatch");
    ThermoModel shifted = model;
    shifted.name = model.name + "+shift";

    if (model.coupling) {
        shifted.coupling = [base = model.coupling, mu](std::span<const double> z,
                                                       const AlgVec& b) {
            return base(z, b) + num::vdot(mu, b);
        };
    }
    if (model.closed_form_log_partition) {
        shifted.closed_form_log_partition = [base = model.closed_form_log_partition,
                                             mu](const AlgVec& b) {
            return base(b) - num::vdot(mu, b);
        };
    }
    if (model.closed_form_mean) {
        shifted.closed_form_mean = [base = model.closed_form_mean, mu](const AlgVec& b) {
            return num::vadd(base(b), mu);
        };
    }
    if (model.momentum) {
        shifted.momentum = [base = model.momentum, mu](std::span<const double> z) {
            return num::vadd(base(z), mu);
        };
    }
    if (model.cocycle_theta && model.ad_star) {
        // J + mu changes the group cocycle; infinitesimally Theta picks up
        // ad*_X mu, which keeps Theta_b invariant.
        shifted.cocycle_theta = [base = model.cocycle_theta, ad = model.ad_star,
                                 mu](const AlgVec& x) {
            return num::vadd(base(x), ad(x, mu));
        };
    }
    return shifted;
}

ThermoReport make_report(const ThermoModel& model, const AlgVec& b, double k_boltzmann,
                         const McBudget& budget, const std::optional<AlgVec>& ray) {
    ThermoReport rep;
    rep.b = b;
    rep.log_p = log_partition(model, b, budget);
    rep.mean = mean_momentum(model, b, budget);
    rep.entropy = rep.log_p + num::vdot(rep.mean, b);

    if (ray) {
        rep.variance = {{-covariance_form(model, b, *ray, *ray, budget)}};
    } else {
        const int d = model.dim_b;
        rep.variance.assign(d, std::vector<double>(d, 0.0));
        for (int i = 0; i < d; ++i) {
            AlgVec ei(d, 0.0);
            ei[i] = 1.0;
            for (int j = i; j < d; ++j) {
                AlgVec ej(d, 0.0);
                ej[j] = 1.0;
                const double v = -covariance_form(model, b, ei, ej, budget);
                rep.variance[i][j] = v;
                rep.variance[j][i] = v;
            }
        }
    }

    if (model.dim_b == 1)
        rep.temperature = 1.0 / (k_boltzmann * b[0]);
    else if (model.kind == ModelKind::vessel)
        rep.temperature = -1.0 / (k_boltzmann * b[9]);
    else
        rep.temperature = std::numeric_limits<double>::quiet_NaN();
    return rep;
}

}  // namespace gibbs
