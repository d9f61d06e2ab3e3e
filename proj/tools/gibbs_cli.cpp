// gibbs: thermodynamic sweeps, verification, sampling and equilibration for
// the models in this library. JSON config selects the model; flags choose the
// parameter grid, sample count, seed and output. Exit codes: 0 success,
// 1 verification failure, 2 usage or config error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gibbs/mechanics.hpp"
#include "gibbs/models.hpp"
#include "gibbs/numerics.hpp"
#include "gibbs/oracle.hpp"
#include "gibbs/thermo.hpp"

using nlohmann::json;

namespace {

struct CliOptions {
    std::string config_path;
    std::optional<double> b_value;
    double b_min = 0.0, b_max = 0.0;
    int steps = 0;
    long n = 10000;
    std::uint64_t seed = 42;
    std::string out_path;
    bool inject_bias = false;  // verify-only test hook
};

gibbs::Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::runtime_error("expected a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<double> masses_from_json(const json& j) {
    std::vector<double> m = j.at("masses").get<std::vector<double>>();
    if (m.empty()) throw std::runtime_error("masses must be non-empty");
    return m;
}

/// Builds the model and the base algebra direction b0; the CLI sweeps b = v b0.
gibbs::ThermoModel model_from_json(const json& j, gibbs::AlgVec& b0) {
    const std::string kind = j.at("model").get<std::string>();
    b0 = {1.0};
    if (kind == "ideal_gas") {
        gibbs::IdealGasSpec spec;
        spec.volume = j.at("volume").get<double>();
        spec.masses = masses_from_json(j);
        return gibbs::make_ideal_gas_model(spec);
    }
    if (kind == "gravity") {
        gibbs::GravityGasSpec spec;
        spec.section_area = j.at("section_area").get<double>();
        spec.height = j.at("height").get<double>();
        spec.gravity = j.at("gravity").get<double>();
        spec.masses = masses_from_json(j);
        return gibbs::make_gravity_gas_model(spec);
    }
    if (kind == "relativistic") {
        gibbs::RelativisticGasSpec spec;
        spec.volume = j.at("volume").get<double>();
        spec.light_speed = j.at("light_speed").get<double>();
        spec.masses = masses_from_json(j);
        return gibbs::make_relativistic_gas_model(spec);
    }
    if (kind == "massless") {
        gibbs::MasslessGasSpec spec;
        spec.volume = j.at("volume").get<double>();
        spec.light_speed = j.at("light_speed").get<double>();
        // Particle count from the masses list; entries must be zero.
        const auto masses = j.at("masses").get<std::vector<double>>();
        for (double m : masses)
            if (m != 0.0) throw std::runtime_error("massless model expects masses of 0");
        spec.n_particles = static_cast<int>(masses.size());
        return gibbs::make_massless_gas_model(spec);
    }
    if (kind == "photon") {
        gibbs::PhotonGasSpec spec;
        spec.volume = j.at("volume").get<double>();
        spec.light_speed = j.at("light_speed").get<double>();
        return gibbs::make_photon_gas_model(spec);
    }
    if (kind == "solid") {
        gibbs::SolidSpec spec;
        spec.frequencies = j.at("frequencies").get<std::vector<double>>();
        return gibbs::make_solid_model(spec);
    }
    if (kind == "sphere") {
        gibbs::SphereSpec spec;
        spec.radius = j.at("radius").get<double>();
        b0 = {0.0, 0.0, 1.0};  // sweep along e_z
        return gibbs::make_sphere_model(spec);
    }
    if (kind == "vessel") {
        gibbs::VesselSpec spec;
        if (j.contains("cylinder_radius")) {
            spec.geometry.kind = gibbs::VesselGeometry::Kind::cylinder;
            spec.geometry.cyl_radius = j.at("cylinder_radius").get<double>();
            spec.geometry.cyl_height = j.at("height").get<double>();
        } else {
            spec.geometry.kind = gibbs::VesselGeometry::Kind::box;
            const double side = std::sqrt(j.at("section_area").get<double>());
            spec.geometry.box_lo = {0.0, 0.0, 0.0};
            spec.geometry.box_hi = {side, side, j.at("height").get<double>()};
        }
        spec.masses = masses_from_json(j);
        gibbs::GalileanAlgebraElement base;
        base.omega = vec3_from_json(j.at("omega"));
        base.beta = vec3_from_json(j.at("beta"));
        base.delta = vec3_from_json(j.at("delta"));
        base.epsilon = j.at("epsilon").get<double>();
        b0 = gibbs::to_alg(base);
        return gibbs::make_vessel_model(spec);
    }
    throw std::runtime_error("unknown model '" + kind + "'");
}

std::vector<double> parameter_grid(const CliOptions& opt) {
    if (opt.b_value) return {*opt.b_value};
    if (opt.steps > 0 && opt.b_max < opt.b_min)
        throw std::runtime_error("parameter grid must be ascending (b-min <= b-max)");
    std::vector<double> grid;
    for (int i = 0; i < opt.steps; ++i) {
        grid.push_back(opt.steps == 1
                           ? opt.b_min
                           : opt.b_min + (opt.b_max - opt.b_min) * i / (opt.steps - 1.0));
    }
    return grid;
}

std::ostream& open_output(const CliOptions& opt, std::ofstream& file) {
    if (opt.out_path.empty()) return std::cout;
    file.open(opt.out_path);
    if (!file) throw std::runtime_error("cannot open output file " + opt.out_path);
    return file;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_thermo(const json& config, const CliOptions& opt) {
    gibbs::AlgVec b0;
    const gibbs::ThermoModel model = model_from_json(config, b0);
    const double k = config.value("boltzmann_constant", 1.0);
    const std::vector<double> grid = parameter_grid(opt);
    if (grid.empty()) {
        std::cerr << "usage: thermo needs --b or --b-min/--b-max/--steps\n";
        return 2;
    }

    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    os << "b,T,log_p,energy,entropy,var_h,admissible\n";
    for (double v : grid) {
        const gibbs::AlgVec b = gibbs::num::vscale(v, b0);
        const auto adm = model.admissible(b);
        if (!adm.admissible) {
            os << fmt(v) << ",nan,nan,nan,nan,nan,inadmissible\n";
            continue;
        }
        const gibbs::ThermoReport rep =
            gibbs::make_report(model, b, k, gibbs::McBudget{opt.n, opt.seed}, b0);
        // Along the ray b = v b0 the scalar conjugate pair is
        // (v, <E_J, b0>); entropy = log P + v energy.
        const double energy = gibbs::num::vdot(rep.mean, b0);
        double temperature = 1.0 / (k * v);
        if (model.kind == gibbs::ModelKind::vessel) temperature = -1.0 / (k * v * b0[9]);
        os << fmt(v) << "," << fmt(temperature) << "," << fmt(rep.log_p) << "," << fmt(energy)
           << "," << fmt(rep.entropy) << "," << fmt(rep.variance[0][0]) << ",ok\n";
    }
    return 0;
}

int cmd_verify(const json& config, const CliOptions& opt) {
    gibbs::AlgVec b0;
    const gibbs::ThermoModel model = model_from_json(config, b0);
    const double v = opt.b_value.value_or(1.0);
    const gibbs::AlgVec b = gibbs::num::vscale(v, b0);
    const gibbs::McBudget budget{std::max(opt.n, 100000L), opt.seed};

    int failures = 0;
    const auto report = [&](const std::string& name, bool pass, const std::string& detail) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        if (!pass) ++failures;
    };

    double log_p = gibbs::log_partition(model, b);
    if (opt.inject_bias) log_p += 0.01 * std::max(1.0, std::abs(log_p));

    // Closed form against the Monte-Carlo oracle.
    if (model.domain_for && model.coupling) {
        const gibbs::Estimate est = gibbs::log_partition_estimate(model, b, budget);
        const double rel_err = est.std_error / est.value;
        const double diff = std::abs(log_p - std::log(est.value));
        report("closed_form_vs_mc", diff <= 3.0 * rel_err,
               "|log P - log MC| = " + fmt(diff) + ", 3 stderr = " + fmt(3.0 * rel_err));
    } else if (model.kind == gibbs::ModelKind::photon_gas) {
        // Variable photon number: check the closed form against the partial
        // sums of the grand series sum_N (2 lambda_1)^N / N!.
        const double lambda = log_p;
        const int terms = static_cast<int>(10.0 * lambda) + 50;
        double sum = 0.0, log_term = -0.0;
        for (int n = 0; n <= terms; ++n) {
            log_term = n * std::log(lambda) - std::lgamma(n + 1.0);
            sum += std::exp(log_term - lambda);
        }
        report("photon_series_normalization", std::abs(sum - 1.0) < 1e-10,
               "partial-sum residual = " + fmt(sum - 1.0));
    }

    // Mean from the analytic derivative against finite differences.
    {
        const gibbs::AlgVec mean = gibbs::mean_momentum(model, b);
        const double h = std::max(1e-5 * gibbs::num::vnorm(b), 1e-7);
        double worst = 0.0;
        for (int i = 0; i < model.dim_b; ++i) {
            gibbs::AlgVec probe = b;
            const auto f = [&](double t) {
                probe[i] = t;
                return gibbs::log_partition(model, probe);
            };
            const double fd = -gibbs::num::derivative(f, b[i], h);
            worst = std::max(worst, std::abs(fd - mean[i]) /
                                        std::max(1.0, std::abs(mean[i])));
        }
        report("mean_vs_finite_difference", worst <= 1e-6, "max rel err = " + fmt(worst));
    }

    // Covariance non-positivity along the ray.
    {
        const double c = gibbs::covariance_form(model, b, b0, b0);
        report("covariance_nonpositive", c <= 1e-10, "dE/db|ray = " + fmt(c));
    }

    // Entropy identity.
    {
        const double s = gibbs::entropy(model, b);
        const double lhs =
            s - gibbs::log_partition(model, b) - gibbs::num::vdot(gibbs::mean_momentum(model, b), b);
        report("entropy_identity", std::abs(lhs) <= 1e-12 * std::max(1.0, std::abs(s)),
               "residual = " + fmt(lhs));
    }

    return failures == 0 ? 0 : 1;
}

int cmd_sample(const json& config, const CliOptions& opt) {
    gibbs::AlgVec b0;
    const gibbs::ThermoModel model = model_from_json(config, b0);
    const double v = opt.b_value.value_or(1.0);

    gibbs::SampleBatch batch;
    switch (model.kind) {
        case gibbs::ModelKind::ideal_gas:
            batch = gibbs::sample_ideal(std::get<gibbs::IdealGasSpec>(model.spec), v, opt.n,
                                        opt.seed);
            break;
        case gibbs::ModelKind::gravity_gas: {
            // A vertical column is the vessel state with beta = g eps e_z.
            const auto& spec = std::get<gibbs::GravityGasSpec>(model.spec);
            gibbs::VesselSpec vspec;
            const double side = std::sqrt(spec.section_area);
            vspec.geometry.kind = gibbs::VesselGeometry::Kind::box;
            vspec.geometry.box_lo = {0.0, 0.0, 0.0};
            vspec.geometry.box_hi = {side, side, spec.height};
            vspec.masses = spec.masses;
            gibbs::GalileanAlgebraElement bb;
            bb.epsilon = -v;
            bb.beta = {0.0, 0.0, spec.gravity * bb.epsilon};
            batch = gibbs::sample_vessel(vspec, bb, opt.n, opt.seed);
            break;
        }
        case gibbs::ModelKind::relativistic_gas: {
            const auto& spec = std::get<gibbs::RelativisticGasSpec>(model.spec);
            if (spec.masses.size() != 1) {
                std::cerr << "sample: relativistic sampling supports one particle\n";
                return 2;
            }
            batch = gibbs::sample_juttner(spec.masses[0], spec.light_speed, v, opt.n, opt.seed);
            break;
        }
        case gibbs::ModelKind::massless_gas:
            batch = gibbs::sample_massless(std::get<gibbs::MasslessGasSpec>(model.spec), v,
                                           opt.n, opt.seed);
            break;
        case gibbs::ModelKind::sphere:
            batch = gibbs::sample_sphere(std::get<gibbs::SphereSpec>(model.spec),
                                         gibbs::vec3_from_alg(gibbs::num::vscale(v, b0)), opt.n,
                                         opt.seed);
            break;
        case gibbs::ModelKind::vessel:
            batch = gibbs::sample_vessel(std::get<gibbs::VesselSpec>(model.spec),
                                         gibbs::galilean_from_alg(gibbs::num::vscale(v, b0)),
                                         opt.n, opt.seed);
            break;
        default:
            std::cerr << "sample: model '" << model.name << "' has no sampler\n";
            return 2;
    }

    std::ofstream file;
    std::ostream& os = open_output(opt, file);
    gibbs::write_batch_csv(os, batch);
    return 0;
}

int cmd_equilibrate(const json& config, const CliOptions&) {
    gibbs::AlgVec b0a, b0b;
    const gibbs::ThermoModel model_a = model_from_json(config.at("model_a"), b0a);
    const gibbs::ThermoModel model_b = model_from_json(config.at("model_b"), b0b);
    const double b_a = config.at("b_a").get<double>();
    const double b_b = config.at("b_b").get<double>();
    const double k = config.value("boltzmann_constant", 1.0);

    const double b_eq = gibbs::equilibrate(model_a, model_b, b_a, b_b);

    // Energy leaves the hotter part (smaller b).
    const bool a_hot = b_a <= b_b;
    const gibbs::ThermoModel& hot = a_hot ? model_a : model_b;
    const double b_hot = a_hot ? b_a : b_b;
    const double transfer = gibbs::mean_energy(hot, b_hot) - gibbs::mean_energy(hot, b_eq);

    std::cout << "b_eq = " << fmt(b_eq) << "\n";
    std::cout << "T_eq = " << fmt(1.0 / (k * b_eq)) << "\n";
    std::cout << "energy_transferred = " << fmt(transfer) << " (from the b = "
              << fmt(b_hot) << " subsystem)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gibbs-state thermodynamics toolkit"};
    app.require_subcommand(1);

    CliOptions opt;
    double b_flag = 0.0;
    bool b_set = false;

    const auto add_common = [&](CLI::App* sub, bool needs_grid) {
        sub->add_option("--config", opt.config_path, "JSON model configuration")->required();
        auto* bopt = sub->add_option("--b", b_flag, "single parameter value");
        bopt->each([&](const std::string&) { b_set = true; });
        if (needs_grid) {
            sub->add_option("--b-min", opt.b_min, "grid start");
            sub->add_option("--b-max", opt.b_max, "grid end");
            sub->add_option("--steps", opt.steps, "grid points");
        }
        sub->add_option("--n", opt.n, "sample count / oracle budget");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--out", opt.out_path, "output CSV path (default stdout)");
    };

    CLI::App* thermo = app.add_subcommand("thermo", "tabulate thermodynamic functions");
    add_common(thermo, true);
    CLI::App* verify = app.add_subcommand("verify", "cross-check closed forms and identities");
    add_common(verify, false);
    verify->add_flag("--inject-bias", opt.inject_bias, "test hook: bias the closed form by 1%")
        ->group("");
    CLI::App* sample = app.add_subcommand("sample", "draw a phase-space sample batch");
    add_common(sample, false);
    CLI::App* equilibrate =
        app.add_subcommand("equilibrate", "common parameter of two coupled systems");
    equilibrate->add_option("--config", opt.config_path, "JSON with model_a, model_b, b_a, b_b")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (b_set) opt.b_value = b_flag;

    try {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "cannot open config " << opt.config_path << "\n";
            return 2;
        }
        json config = json::parse(in);

        if (thermo->parsed()) return cmd_thermo(config, opt);
        if (verify->parsed()) return cmd_verify(config, opt);
        if (sample->parsed()) return cmd_sample(config, opt);
        if (equilibrate->parsed()) return cmd_equilibrate(config, opt);
        return 2;
    } catch (const gibbs::AdmissibilityError& e) {
        std::cerr << "inadmissible parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
