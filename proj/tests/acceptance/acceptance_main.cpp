// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run with no arguments for all criteria, or pass criterion numbers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dmp/commands.hpp"
#include "dmp/config.hpp"
#include "dmp/deformation.hpp"
#include "dmp/functional.hpp"
#include "dmp/minimax.hpp"
#include "dmp/oracle.hpp"
#include "dmp/reports.hpp"
#include "dmp/rng.hpp"
#include "dmp/spectrum.hpp"
#include "support/oracles.hpp"

using namespace dmp;
using nlohmann::json;

namespace {

std::string g_detail;

void detail(const std::string& msg) { g_detail = msg; }

WeightFunction constant_weight(int m, double amp = 0.0) {
    return WeightFunction{WeightFunction::Kind::constant, amp, m};
}

PotentialSpec desk_potential() {
    return PotentialSpec::trig_quadratic(6, 2.5, 1.0, 1.0, constant_weight(6));
}

PeriodicSequence mode_direction() { return PeriodicSequence({1.0, -1.0, 0.0, 1.0, -1.0, 0.0}); }

ProblemConfig desk_config(double eps) {
    json j = {
        {"M", 6},
        {"seed", 42},
        {"potential",
         {{"kind", "trig_quadratic"},
          {"a", 2.5},
          {"mu", 1.0},
          {"K", 1.0},
          {"weight", {{"kind", "constant"}, {"amplitude", 0.0}}}}},
        {"functional",
         {{"kind", "action"},
          {"growth", 2.4},
          {"geometry",
           {{"kind", "ray"},
            {"direction", {1, -1, 0, 1, -1, 0}},
            {"level", 0.3},
            {"t_max", 8.0}}}}},
        {"conditions", {{"radius", 3.0}, {"offset", 5.0}, {"growth", 2.4}}},
        {"solver", {{"knots", 64}, {"ensemble", 8}, {"eps", eps}}},
        {"oracle", {{"box", 3.0}, {"starts", 500}}},
        {"deformation",
         {{"landscape", "linear"},
          {"dimension", 1},
          {"h", 0.0},
          {"eps", 0.1},
          {"samples_per_set", 40}}},
        {"output", {{"dir", "out"}, {"csv", false}}},
    };
    return parse_config(j);
}

std::vector<PeriodicSequence> ball_samples(int m, double radius, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<PeriodicSequence> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        PeriodicSequence u = PeriodicSequence::zeros(m);
        double len = 0.0;
        while (len < 1e-12) {
            for (int s = 1; s <= m; ++s) u.set(s, rng.gaussian());
            len = norm(u);
        }
        u *= radius * std::pow(rng.uniform01(), 1.0 / m) / len;
        out.push_back(std::move(u));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    for (int m = 3; m <= 12; ++m) {
        const Spectrum sp = laplacian_spectrum(m);
        const std::vector<double> dense = laplacian_spectrum_dense(m);
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (std::abs(dense[i] - sp.eigenvalues[i]) > 1e-10) {
                detail("closed form vs dense mismatch at M = " + std::to_string(m));
                return false;
            }
        }
        // Closed forms recomputed independently of the Spectrum fields.
        const double lmin = 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / m));
        const double lmax = (m % 2 == 0) ? 4.0 : 2.0 * (1.0 + std::cos(std::numbers::pi / m));
        if (std::abs(sp.lambda_min_nonzero - lmin) > 1e-10 ||
            std::abs(sp.lambda_max - lmax) > 1e-10 || std::abs(sp.eigenvalues.front()) > 1e-12) {
            detail("closed-form eigenvalue bounds failed at M = " + std::to_string(m));
            return false;
        }
        // The sorted closed-form multiset must realize both extremes.
        if (std::abs(sp.eigenvalues.back() - lmax) > 1e-10 ||
            std::abs(sp.eigenvalues[1] - lmin) > 1e-10) {
            detail("spectrum extremes missing at M = " + std::to_string(m));
            return false;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 1.0) {
        detail("runtime " + std::to_string(secs) + " s exceeds 1 s");
        return false;
    }
    return true;
}

bool criterion2() {
    Rng rng(20240001);
    for (int trial = 0; trial < 10; ++trial) {
        const double growth = rng.uniform(2.05, 6.0);
        const double scale = rng.uniform(0.2, 2.0);
        const FunctionalSpec f = FunctionalSpec::single_site(desk_potential(), 3, growth);
        const MountainGeometry g = build_spike_geometry(f, scale);
        const double level = growth * scale * scale;
        const double phi0 = f.value(PeriodicSequence::zeros(6));
        const bool ok = std::abs(f.value(g.e) - level) <= 1e-10 &&
                        std::abs(f.value(g.e1) - level) <= 1e-10 && std::abs(phi0) <= 1e-10 &&
                        std::abs(norm(g.e1) - std::sqrt(2.0 * growth) * scale) <= 1e-10 &&
                        std::abs(norm(g.e) - std::sqrt(3.0 * growth) * scale) <= 1e-10;
        if (!ok) {
            std::ostringstream os;
            os << "identity failed at growth = " << growth << ", scale = " << scale;
            detail(os.str());
            return false;
        }
    }
    return true;
}

bool criterion3() {
    struct Instance {
        PotentialSpec p;
        int site;
        double growth;
    };
    const Instance instances[] = {
        {desk_potential(), 3, 2.4},
        {PotentialSpec::trig_quadratic(8, 2.2, 0.8, 2.0, constant_weight(8, 0.5)), 5, 2.1},
        {PotentialSpec::trig_quadratic_half(
             7, 3.9, 1.0, WeightFunction{WeightFunction::Kind::cosine, 0.5, 7}),
         2, 2.0},
    };
    Rng rng(20240003);
    for (const auto& inst : instances) {
        const FunctionalSpec fs[] = {
            FunctionalSpec::action(inst.p),
            FunctionalSpec::single_site(inst.p, inst.site, inst.growth)};
        for (const auto& f : fs) {
            for (int trial = 0; trial < 100; ++trial) {
                PeriodicSequence u = PeriodicSequence::zeros(f.period());
                for (int s = 1; s <= f.period(); ++s) u.set(s, rng.uniform(-5.0, 5.0));
                const double err =
                    testing::rel_gradient_error(f.gradient(u), testing::fd_gradient(f, u));
                if (err > 1e-6) {
                    detail("relative gradient error " + std::to_string(err));
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion4() {
    const PotentialSpec p = desk_potential();
    ConditionCheckParams params;
    params.growth_candidate = GrowthConstants{3.0, 5.0, 2.4};
    const ConditionReport growth_rep = check_condition(p, ConditionId::growth_bound, params);
    if (!growth_rep.holds_on_sample) {
        detail("growth bound certification failed");
        return false;
    }
    const PsConstants c = derive_ps_constants(p, *growth_rep.growth_constants);
    const FunctionalSpec f = FunctionalSpec::action(p);
    const auto samples = ball_samples(6, 10.0, 10000, 20240004);
    const SweepReport co = coercivity_check(f, c, samples);
    const SweepReport ps = palais_smale_check(f, c, 10.0, samples);
    if (co.violations != 0 || ps.violations != 0) {
        detail("violations: coercivity " + std::to_string(co.violations) + ", norm bound " +
               std::to_string(ps.violations));
        return false;
    }
    return true;
}

bool criterion5() {
    Rng rng(20240005);
    const FunctionalSpec fa = FunctionalSpec::action(desk_potential());
    const FunctionalSpec fs = FunctionalSpec::single_site(desk_potential(), 3, 2.4);
    for (int trial = 0; trial < 100; ++trial) {
        const double cval = rng.uniform(-10.0, 10.0);
        const PeriodicSequence u = PeriodicSequence::constant(6, cval);
        if (fa.value(u) > 1e-12 || fs.value(u) > 1e-12) {
            detail("positive value on the constant sequence c = " + std::to_string(cval));
            return false;
        }
    }
    return true;
}

bool criterion6() {
    const ToyLandscape land = ToyLandscape::linear(1);
    const BandSpec band(0.0, 0.1, DSpec::empty());
    Rng rng(20240006);

    // psi trichotomy, 1000 samples per set.
    for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd b = point_at_level(land, rng.uniform(band.b_lo(), band.b_hi()), rng);
        Eigen::VectorXd c = point_at_level(land, rng.uniform(band.c_lo(), band.c_hi()), rng);
        const double off = (i % 2 == 0) ? rng.uniform(band.band_hi() + 1e-9, band.band_hi() + 3.0)
                                        : rng.uniform(band.band_lo() - 3.0, band.band_lo() - 1e-9);
        Eigen::VectorXd x = point_at_level(land, off, rng);
        if (std::abs(psi_eval(land, band, b) - 1.0) > 1e-12 ||
            std::abs(psi_eval(land, band, c) + 1.0) > 1e-12 ||
            std::abs(psi_eval(land, band, x)) > 1e-12) {
            detail("psi trichotomy violated");
            return false;
        }
        const double inside = rng.uniform(band.band_lo(), band.band_hi());
        const Eigen::VectorXd v = point_at_level(land, inside, rng);
        if (vector_field_eval(land, band, v).norm() > 1.0 / (2.0 * band.eps()) + 1e-12) {
            detail("field norm exceeds (2 eps)^{-1}");
            return false;
        }
    }

    // Flow identity along 100 traces.
    for (int i = 0; i < 100; ++i) {
        const double level = rng.uniform(band.band_lo(), band.band_hi());
        const FlowTrace tr =
            flow(land, band, point_at_level(land, level, rng), 2.0 * band.eps(), 1e-9);
        if (tr.status != OdeStatus::ok) {
            detail("flow failed: " + tr.message);
            return false;
        }
        for (std::size_t k = 0; k < tr.t.size(); ++k) {
            if (std::abs(tr.dphi_dt[k] - tr.psi[k]) > 1e-6) {
                detail("flow identity violated along a trace");
                return false;
            }
        }
    }

    // Fixed-point conclusion including points of the fixed set D.
    const BandSpec slab_band(0.0, 0.1, DSpec::mid_slab(0.001, 0.001));
    const DeformationVerdict v = verify_band_deformation(land, slab_band, 50, 20240106);
    const DeformationVerdict v0 = verify_band_deformation(land, band, 50, 20240107);
    if (!v.fixed_points.pass || !v0.fixed_points.pass) {
        detail("fixed-point suite failed");
        return false;
    }
    return true;
}

bool criterion7() {
    const DescentVerdict v =
        verify_descent_deformation(ToyLandscape::linear(1), 0.0, 0.1, 200, 20240007);
    if (static_cast<int>(v.samples.size()) != 200) {
        detail("sample count mismatch");
        return false;
    }
    for (const auto& s : v.samples) {
        if (s.phi_initial <= 0.0 + 0.1 && s.phi_final > -0.1 + 1e-6) {
            detail("a start at phi = " + std::to_string(s.phi_initial) + " ended at " +
                   std::to_string(s.phi_final));
            return false;
        }
    }
    return v.pass;
}

bool criterion8() {
    ProblemConfig config = desk_config(0.01);
    const json a = deform_report_body(config);
    const json b = deform_report_body(config);
    if (a.dump() != b.dump()) {
        detail("report body not reproducible under the fixed seed");
        return false;
    }
    if (a.at("variants").size() != 3) {
        detail("expected the three fixed-set variants");
        return false;
    }
    for (const auto& variant : a.at("variants")) {
        for (const char* key : {"d_kind", "hypothesis", "fixed_points", "upward_inclusion",
                                "downward_inclusion"}) {
            if (!variant.contains(key)) {
                detail(std::string("variant missing field ") + key);
                return false;
            }
        }
        for (const char* conclusion : {"upward_inclusion", "downward_inclusion"}) {
            const auto& samples = variant.at(conclusion).at("samples");
            if (samples.empty()) {
                detail("no witnesses recorded");
                return false;
            }
            for (const auto& s : samples) {
                if (!s.contains("start") || !s.contains("phi_initial") ||
                    !s.contains("phi_final") || !s.contains("pass")) {
                    detail("witness missing fields");
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion9() {
    // Independent scalar oracle first.
    const double a_ref = testing::sine_slope_root(0.8, 1.0, 1.3);

    const std::vector<double> roots =
        ray_critical_scan(desk_potential(), mode_direction(), 0.0, 3.0);
    double a_found = -1.0;
    for (double r : roots) {
        if (r > 1.0) a_found = r;
    }
    if (a_found < 0.0) {
        detail("scan did not find the positive root");
        return false;
    }
    if (std::abs(std::sin(a_found) - 0.8 * a_found) > 1e-12) {
        detail("scalar equation residual too large");
        return false;
    }
    if (!(a_found > 1.12 && a_found < 1.14) || std::abs(a_found - a_ref) > 1e-9) {
        detail("root location off: " + std::to_string(a_found));
        return false;
    }
    const PeriodicSequence u = a_found * mode_direction();
    if (residual(u, desk_potential()) > 1e-10) {
        detail("embedded sequence residual too large");
        return false;
    }
    const double phi = FunctionalSpec::action(desk_potential()).value(u);
    if (!(phi > 0.60 && phi < 0.64)) {
        detail("action value outside (0.60, 0.64): " + std::to_string(phi));
        return false;
    }
    return true;
}

bool criterion10() {
    const auto t0 = std::chrono::steady_clock::now();
    const ProblemConfig config = desk_config(0.01);
    const PotentialSpec p = make_potential(config);
    const FunctionalSpec f = make_functional(config);
    const MountainGeometry g = make_geometry(config, f);

    SolveBudgets budgets;
    budgets.n_segments = config.solver.knots;
    budgets.ensemble = config.solver.ensemble;
    const MinimaxReport rep = mountain_pass_solve(f, g, config.solver.eps, budgets, config.seed);

    const NewtonResult refined = newton_refine(rep.u_hat, p, 1e-12, 80);
    const double grad_norm = norm(f.gradient(refined.u));
    const double res = residual(refined.u, p);
    const double phi = f.value(refined.u);
    if (grad_norm > 1e-8 || res > 1e-8) {
        detail("refined gradient " + std::to_string(grad_norm) + ", residual " +
               std::to_string(res));
        return false;
    }
    if (!(phi > 0.0)) {
        detail("refined action value not positive: " + std::to_string(phi));
        return false;
    }

    MultistartOptions mopt;
    mopt.random_starts = 500;
    const SolutionCatalog catalog = multistart(p, mopt, mix_seed(config.seed, 105));
    const CatalogMatch match = catalog_match(catalog, refined.u, 1e-6);
    if (!match.matched) {
        detail("catalog match distance " + std::to_string(match.distance));
        return false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 60.0) {
        detail("runtime " + std::to_string(secs) + " s exceeds 60 s");
        return false;
    }
    return true;
}

bool criterion11() {
    const ProblemConfig config = desk_config(0.01);
    const FunctionalSpec f = make_functional(config);
    const MountainGeometry g = make_geometry(config, f);
    for (double eps : {0.1, 0.01}) {
        SolveBudgets budgets;
        budgets.n_segments = config.solver.knots;
        budgets.ensemble = config.solver.ensemble;
        const MinimaxReport rep = mountain_pass_solve(f, g, eps, budgets, config.seed);
        if (!rep.level_certificate || !rep.gradient_certificate) {
            detail("certificates failed at eps = " + std::to_string(eps));
            return false;
        }
        try {
            const CertificateRecord rec = certify_minimax_report(rep, f);
            if (!rec.level_certificate || !rec.gradient_certificate) {
                detail("recheck lost a certificate at eps = " + std::to_string(eps));
                return false;
            }
        } catch (const std::exception& e) {
            detail(std::string("recheck mismatch: ") + e.what());
            return false;
        }
    }
    return true;
}

bool criterion12() {
    ProblemConfig config = desk_config(0.01);
    // The bodies cover criteria 9-11: the oracle body carries the ray scan
    // and catalog, the solve bodies carry the minimax reports, certificates,
    // refinement, and catalog match at both tolerances.
    const json oracle_a = oracle_report_body(config);
    const json oracle_b = oracle_report_body(config);
    if (oracle_a.dump() != oracle_b.dump()) {
        detail("oracle body differs between identical runs");
        return false;
    }
    for (double eps : {0.1, 0.01}) {
        config.solver.eps = eps;
        const json solve_a = solve_report_body(config);
        const json solve_b = solve_report_body(config);
        if (solve_a.dump() != solve_b.dump()) {
            detail("solve body differs between identical runs at eps = " + std::to_string(eps));
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* description;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "ring Laplacian spectrum closed forms, M = 3..12, 1e-10, under 1 s", criterion1},
    {2, "pinned-level identities for 10 random spike geometries, 1e-10", criterion2},
    {3, "analytic vs central-difference gradients, both kinds, rel err 1e-6", criterion3},
    {4, "coercivity and norm-bound sweeps, 10^4 samples, zero violations", criterion4},
    {5, "constant sequences keep both functionals nonpositive", criterion5},
    {6, "band construction: psi trichotomy, field bound, flow identity, fixed points",
     criterion6},
    {7, "descent deformation drops the inner band a full width, 200 samples", criterion7},
    {8, "verdict harness: three fixed-set variants, witnesses, reproducible body", criterion8},
    {9, "scalar ray oracle: root, interval, embedded residual, action window", criterion9},
    {10, "end-to-end solve, refine, catalog match within 60 s", criterion10},
    {11, "minimax certificates at eps = 0.1 and 0.01 with independent recheck", criterion11},
    {12, "byte-identical report bodies under the fixed seed", criterion12},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) {
            continue;
        }
        g_detail.clear();
        bool ok = false;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            detail(std::string("exception: ") + e.what());
        }
        std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.description, g_detail.empty() ? "" : " -- ", g_detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
