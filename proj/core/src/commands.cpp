#include "dmp/commands.hpp"

#include <cmath>
#include <filesystem>
#include <vector>

#include "dmp/reports.hpp"
#include "dmp/rng.hpp"

namespace dmp {

namespace {

// Substream ids for the independent random stages of a run.
constexpr std::uint64_t kStreamSweep = 101;
constexpr std::uint64_t kStreamSphere = 103;
constexpr std::uint64_t kStreamDeform = 104;
constexpr std::uint64_t kStreamOracle = 105;

std::vector<PeriodicSequence> ball_samples(int period, double radius, int count, Rng& rng) {
    std::vector<PeriodicSequence> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        PeriodicSequence u = PeriodicSequence::zeros(period);
        double len = 0.0;
        while (len < 1e-12) {
            for (int s = 1; s <= period; ++s) u.set(s, rng.gaussian());
            len = norm(u);
        }
        const double r = radius * std::pow(rng.uniform01(), 1.0 / period);
        u *= r / len;
        out.push_back(std::move(u));
    }
    return out;
}

DSpec make_dspec(const ProblemConfig& c, const std::string& variant) {
    if (variant == "empty") return DSpec::empty();
    if (variant == "mid_slab") {
        return DSpec::mid_slab(c.deformation.slab_margin * c.deformation.eps,
                               c.deformation.slab_margin * c.deformation.eps);
    }
    return DSpec::level_set(c.deformation.h);
}

ToyLandscape make_landscape(const ProblemConfig& c) {
    if (c.deformation.landscape == "saddle") return ToyLandscape::saddle(c.deformation.dimension);
    return ToyLandscape::linear(c.deformation.dimension);
}

}  // namespace

nlohmann::json spectrum_report_body(int period) {
    const Spectrum sp = laplacian_spectrum(period);
    const std::vector<double> dense = laplacian_spectrum_dense(period);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(dense[i] - sp.eigenvalues[i]));
    }
    nlohmann::json body = to_json(sp);
    body["dense_cross_check_max_diff"] = max_diff;
    return body;
}

nlohmann::json check_report_body(const ProblemConfig& config) {
    const PotentialSpec p = make_potential(config);
    ConditionCheckParams params;
    params.x_samples = config.conditions.samples;
    params.x_max = config.conditions.x_max;
    params.growth_x_max = config.conditions.growth_x_max;
    params.growth_samples = config.conditions.growth_samples;
    params.growth_candidate = GrowthConstants{config.conditions.radius, config.conditions.offset,
                                              config.conditions.growth};

    nlohmann::json reports = nlohmann::json::array();
    for (ConditionId id : {ConditionId::nonneg_periodic, ConditionId::smooth_nonneg_periodic,
                           ConditionId::zero_at_origin, ConditionId::near_origin_bound,
                           ConditionId::growth_bound}) {
        reports.push_back(to_json(check_condition(p, id, params)));
    }
    nlohmann::json body;
    body["config"] = config_to_json(config);
    body["conditions"] = reports;
    return body;
}

namespace {

struct SolveArtifacts {
    nlohmann::json body;
    std::vector<PeriodicSequence> best_path;
    SolutionCatalog catalog;
};

SolveArtifacts run_solve(const ProblemConfig& config);

}  // namespace

nlohmann::json solve_report_body(const ProblemConfig& config) { return run_solve(config).body; }

namespace {

SolveArtifacts run_solve(const ProblemConfig& config) {
    const PotentialSpec p = make_potential(config);
    const FunctionalSpec f = make_functional(config);
    const MountainGeometry geometry = make_geometry(config, f);

    nlohmann::json body;
    body["config"] = config_to_json(config);
    body["geometry"] = to_json(geometry);

    // Certified growth constants feed the two bound sweeps.
    ConditionCheckParams cparams;
    cparams.growth_candidate = GrowthConstants{config.conditions.radius, config.conditions.offset,
                                               config.conditions.growth};
    cparams.growth_x_max = config.conditions.growth_x_max;
    cparams.growth_samples = config.conditions.growth_samples;
    const ConditionReport growth_rep = check_condition(p, ConditionId::growth_bound, cparams);
    body["growth_condition"] = to_json(growth_rep);
    if (growth_rep.holds_on_sample) {
        const PsConstants constants = derive_ps_constants(p, *growth_rep.growth_constants,
                                                          config.conditions.w_scan_points);
        body["ps_constants"] = to_json(constants);
        Rng sweep_rng = Rng::stream(config.seed, kStreamSweep);
        const auto samples = ball_samples(config.M, 10.0, 2000, sweep_rng);
        body["coercivity"] = to_json(coercivity_check(f, constants, samples));
        body["palais_smale"] = to_json(palais_smale_check(f, constants, 10.0, samples));
    }

    SolveBudgets budgets;
    budgets.n_segments = config.solver.knots;
    budgets.ensemble = config.solver.ensemble;
    budgets.max_iterations = config.solver.max_iterations;
    budgets.stall_window = config.solver.stall_window;
    budgets.stall_rtol = config.solver.stall_rtol;
    budgets.refine_doublings = config.solver.refine_doublings;
    budgets.jitter = config.solver.jitter;

    const MinimaxReport report = mountain_pass_solve(f, geometry, config.solver.eps, budgets,
                                                     config.seed);
    body["minimax"] = to_json(report);
    body["certify"] = to_json(certify_minimax_report(report, f));

    const NewtonResult refined = newton_refine(report.u_hat, p, config.solver.newton_tol);
    body["refined"] = to_json(refined);
    const FunctionalSpec action = FunctionalSpec::action(p);
    const double phi_action = action.value(refined.u);
    body["refined"]["phi_action"] = phi_action;
    body["refined"]["grad_action_norm"] = norm(action.gradient(refined.u));
    body["refined"]["nontrivial"] = phi_action > 0.0;

    MultistartOptions mopt;
    mopt.box_halfwidth = config.oracle.box;
    mopt.random_starts = config.oracle.starts;
    mopt.tol = config.oracle.tol;
    mopt.dedup_tol = config.oracle.dedup_tol;
    const SolutionCatalog catalog = multistart(p, mopt, mix_seed(config.seed, kStreamOracle));
    body["catalog_summary"] = {{"entries", catalog.entries.size()},
                               {"starts_attempted", catalog.starts_attempted},
                               {"starts_converged", catalog.starts_converged}};
    body["catalog_match"] =
        to_json(catalog_match(catalog, refined.u, config.solver.catalog_match_tol));

    if (config.solver.sphere_infimum) {
        body["sphere_infimum_estimate"] =
            estimate_sphere_infimum(f, geometry.r, config.solver.sphere_restarts,
                                    mix_seed(config.seed, kStreamSphere));
    }
    SolveArtifacts artifacts;
    artifacts.body = std::move(body);
    artifacts.best_path = report.best_path;
    artifacts.catalog = catalog;
    return artifacts;
}

}  // namespace

nlohmann::json deform_report_body(const ProblemConfig& config) {
    const ToyLandscape land = make_landscape(config);
    nlohmann::json variants = nlohmann::json::array();
    for (const auto& variant : config.deformation.d_variants) {
        const BandSpec band(config.deformation.h, config.deformation.eps,
                            make_dspec(config, variant));
        const DeformationVerdict verdict =
            verify_band_deformation(land, band, config.deformation.samples_per_set,
                                    mix_seed(config.seed, kStreamDeform), config.deformation.tol);
        variants.push_back(to_json(verdict));
    }
    const DescentVerdict descent = verify_descent_deformation(
        land, config.deformation.h, config.deformation.eps, 2 * config.deformation.samples_per_set,
        mix_seed(config.seed, kStreamDeform + 1), config.deformation.tol);

    nlohmann::json body;
    body["config"] = config_to_json(config);
    body["landscape"] = config.deformation.landscape;
    body["dimension"] = config.deformation.dimension;
    body["variants"] = variants;
    body["descent_baseline"] = to_json(descent);
    return body;
}

nlohmann::json oracle_report_body(const ProblemConfig& config) {
    const PotentialSpec p = make_potential(config);
    MultistartOptions mopt;
    mopt.box_halfwidth = config.oracle.box;
    mopt.random_starts = config.oracle.starts;
    mopt.tol = config.oracle.tol;
    mopt.dedup_tol = config.oracle.dedup_tol;
    const SolutionCatalog catalog = multistart(p, mopt, mix_seed(config.seed, kStreamOracle));

    nlohmann::json body;
    body["config"] = config_to_json(config);
    body["catalog"] = to_json(catalog);

    const auto& dir = config.functional.geometry.direction;
    if (dir.size() == static_cast<std::size_t>(config.M) && p.autonomous() && p.even_in_x()) {
        bool spike_entries = true;
        for (double v : dir) {
            if (v != 0.0 && std::abs(std::abs(v) - 1.0) > 1e-12) spike_entries = false;
        }
        if (spike_entries) {
            body["ray_scan"] = {
                {"direction", dir},
                {"roots", ray_critical_scan(p, PeriodicSequence(dir), 0.0,
                                            config.functional.geometry.t_max)}};
        }
    }
    return body;
}

namespace {

int write_report(const std::string& kind, const std::string& out_dir, nlohmann::json body) {
    const std::filesystem::path dir(out_dir);
    write_json_atomic(dir / (kind + ".json"), report_envelope(kind, std::move(body)));
    return 0;
}

}  // namespace

int cmd_spectrum(int period, const std::string& out_dir) {
    return write_report("spectrum", out_dir, spectrum_report_body(period));
}

int cmd_check(const ProblemConfig& config) {
    return write_report("check", config.output.dir, check_report_body(config));
}

int cmd_solve(const ProblemConfig& config) {
    SolveArtifacts artifacts = run_solve(config);
    if (config.output.csv) {
        const FunctionalSpec f = make_functional(config);
        write_text_atomic(std::filesystem::path(config.output.dir) / "best_path.csv",
                          path_csv(artifacts.best_path, f));
        write_text_atomic(std::filesystem::path(config.output.dir) / "catalog.csv",
                          catalog_csv(artifacts.catalog));
    }
    return write_report("solve", config.output.dir, std::move(artifacts.body));
}

int cmd_deform(const ProblemConfig& config) {
    nlohmann::json body = deform_report_body(config);
    if (config.output.csv && config.deformation.traces > 0) {
        const ToyLandscape land = make_landscape(config);
        const BandSpec band(config.deformation.h, config.deformation.eps,
                            make_dspec(config, config.deformation.d_variants.empty()
                                                   ? "empty"
                                                   : config.deformation.d_variants.front()));
        Rng rng = Rng::stream(mix_seed(config.seed, kStreamDeform + 2), 0);
        for (int k = 0; k < config.deformation.traces; ++k) {
            const double level = rng.uniform(band.b_lo(), band.b_hi());
            const Eigen::VectorXd v = point_at_level(land, level, rng);
            const FlowTrace tr = flow(land, band, v, 2.0 * band.eps(), config.deformation.tol);
            write_text_atomic(std::filesystem::path(config.output.dir) /
                                  ("trace_" + std::to_string(k) + ".csv"),
                              trace_csv(tr));
        }
    }
    return write_report("deform", config.output.dir, std::move(body));
}

int cmd_oracle(const ProblemConfig& config) {
    nlohmann::json body = oracle_report_body(config);
    if (config.output.csv) {
        const PotentialSpec p = make_potential(config);
        MultistartOptions mopt;
        mopt.box_halfwidth = config.oracle.box;
        mopt.random_starts = config.oracle.starts;
        mopt.tol = config.oracle.tol;
        mopt.dedup_tol = config.oracle.dedup_tol;
        const SolutionCatalog catalog = multistart(p, mopt, mix_seed(config.seed, kStreamOracle));
        write_text_atomic(std::filesystem::path(config.output.dir) / "catalog.csv",
                          catalog_csv(catalog));
    }
    return write_report("oracle", config.output.dir, std::move(body));
}

}  // namespace dmp
