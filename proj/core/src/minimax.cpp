#include "dmp/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dmp/rng.hpp"

namespace dmp {

namespace {

void validate_geometry(const Objective& f, const MountainGeometry& g) {
    const double phi0 = f.value(PeriodicSequence::zeros(f.period()));
    const double phie = f.value(g.e);
    const double phie1 = f.value(g.e1);
    if (!(std::abs(phie - g.level) <= 1e-8 && std::abs(phie1 - g.level) <= 1e-8)) {
        throw std::invalid_argument("mountain_pass_solve: phi(e), phi(e1) do not sit at the level");
    }
    if (!(phi0 < g.level)) {
        throw std::invalid_argument("mountain_pass_solve: phi(0) must lie below the level");
    }
    const double ne1 = norm(g.e1), ne = norm(g.e);
    if (!(0.0 < ne1 && ne1 < g.r && g.r < ne)) {
        throw std::invalid_argument("mountain_pass_solve: need 0 < |e1| < r < |e|");
    }
}

struct MemberState {
    DiscretePath path;
    std::vector<double> knot_steps;
    MemberDiagnostics diag;
    std::vector<double> max_history;
};

}  // namespace

MinimaxReport mountain_pass_solve(const Objective& f, const MountainGeometry& geometry, double eps,
                                  const SolveBudgets& budgets, std::uint64_t seed) {
    if (!(eps > 0.0)) throw std::invalid_argument("mountain_pass_solve: eps must be positive");
    validate_geometry(f, geometry);

    MinimaxReport report;
    report.epsilon = eps;
    report.seed = seed;
    report.ensemble = budgets.ensemble;
    report.e1_level = f.value(geometry.e1);
    report.c1_diagnostic =
        std::max(f.value(PeriodicSequence::zeros(f.period())), f.value(geometry.e));

    const double jitter_scale = budgets.jitter * norm(geometry.e);

    std::vector<MemberState> members(static_cast<std::size_t>(budgets.ensemble));
    for (int mi = 0; mi < budgets.ensemble; ++mi) {
        MemberState& ms = members[static_cast<std::size_t>(mi)];
        ms.path = init_path(geometry, budgets.n_segments);
        ms.diag.index = mi;
        if (mi > 0 && jitter_scale > 0.0) {
            // Member 0 relaxes the unperturbed seed; the rest get independent
            // jitter on every unpinned knot.
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(mi));
            const int n = ms.path.segments();
            for (int k = 1; k < n; ++k) {
                if (k == n / 2) continue;
                auto& knot = ms.path.knots[static_cast<std::size_t>(k)];
                for (int s = 1; s <= f.period(); ++s) {
                    knot.set(s, knot.at(s) + jitter_scale * rng.gaussian());
                }
            }
        }
    }

    auto stalled = [&](const MemberState& ms) {
        const int w = budgets.stall_window;
        const int n = static_cast<int>(ms.max_history.size());
        if (n < w + 1) return false;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int i = n - w - 1; i < n; ++i) {
            lo = std::min(lo, ms.max_history[static_cast<std::size_t>(i)]);
            hi = std::max(hi, ms.max_history[static_cast<std::size_t>(i)]);
        }
        return hi - lo <= budgets.stall_rtol * (1.0 + std::abs(hi));
    };

    int total_iterations = 0;
    for (auto& ms : members) {
        int level = 0;
        bool done = false;
        while (!done) {
            ms.max_history.clear();
            ms.max_history.push_back(path_max(ms.path, f).second);
            bool level_converged = false;
            for (int it = 0; it < budgets.max_iterations; ++it) {
                const RelaxResult rr = relax_step(ms.path, f, budgets.relax, ms.knot_steps);
                ms.diag.iterations += 1;
                total_iterations += 1;
                ms.max_history.push_back(rr.max_after);
                if (rr.stalled || stalled(ms)) {
                    level_converged = true;
                    break;
                }
            }
            if (level_converged && level < budgets.refine_doublings) {
                ms.path = refine_double(ms.path);
                ms.knot_steps.clear();
                ++level;
            } else {
                ms.diag.converged = level_converged;
                done = true;
            }
        }
        const auto [idx, val] = path_max(ms.path, f);
        ms.diag.final_max = val;
        ms.diag.grad_at_max = norm(f.gradient(ms.path.knots[static_cast<std::size_t>(idx)]));
        ms.diag.certificate_bearing = ms.diag.grad_at_max < 2.0 * eps;
    }

    // Deterministic reduction in member order: prefer converged certificate
    // bearers, then converged members, then anything.
    int best = -1;
    auto better = [&](const MemberState& cand, const MemberState& incumbent) {
        auto rank = [](const MemberDiagnostics& d) {
            return (d.converged && d.certificate_bearing) ? 0 : (d.converged ? 1 : 2);
        };
        const int rc = rank(cand.diag), ri = rank(incumbent.diag);
        if (rc != ri) return rc < ri;
        return cand.diag.final_max < incumbent.diag.final_max;
    };
    for (int mi = 0; mi < budgets.ensemble; ++mi) {
        if (best < 0 || better(members[static_cast<std::size_t>(mi)],
                               members[static_cast<std::size_t>(best)])) {
            best = mi;
        }
    }
    const MemberState& win = members[static_cast<std::size_t>(best)];
    const auto [max_idx, max_val] = path_max(win.path, f);

    report.c_hat = max_val;
    report.u_hat = win.path.knots[static_cast<std::size_t>(max_idx)];
    report.iterations = total_iterations;
    report.knots_final = win.path.segments();
    report.best_path = win.path.knots;

    const CertificateRecord cert = evaluate_certificates(f, report.u_hat, report.c_hat, eps);
    report.phi_value = cert.phi_recomputed;
    report.grad_norm = cert.grad_recomputed;
    report.level_certificate = cert.level_certificate;
    report.gradient_certificate = cert.gradient_certificate;

    // Running best path-max over (iteration, member) order, cumulative min.
    std::size_t longest = 0;
    for (const auto& ms : members) longest = std::max(longest, ms.max_history.size());
    double running = std::numeric_limits<double>::infinity();
    for (std::size_t it = 0; it < longest; ++it) {
        for (const auto& ms : members) {
            if (it < ms.max_history.size()) running = std::min(running, ms.max_history[it]);
        }
        report.c_hat_trace.push_back(running);
    }

    for (const auto& ms : members) report.members.push_back(ms.diag);
    return report;
}

CertificateRecord evaluate_certificates(const Objective& f, const PeriodicSequence& u_hat,
                                        double c_hat, double eps) {
    CertificateRecord rec;
    rec.phi_recomputed = f.value(u_hat);
    rec.grad_recomputed = norm(f.gradient(u_hat));
    rec.level_certificate =
        c_hat - 2.0 * eps <= rec.phi_recomputed && rec.phi_recomputed <= c_hat + 2.0 * eps;
    rec.gradient_certificate = rec.grad_recomputed < 2.0 * eps;
    return rec;
}

CertificateRecord certify_minimax_report(const MinimaxReport& report, const Objective& f) {
    const CertificateRecord rec =
        evaluate_certificates(f, report.u_hat, report.c_hat, report.epsilon);
    const double tol = 1e-12;
    if (std::abs(rec.phi_recomputed - report.phi_value) > tol * (1.0 + std::abs(rec.phi_recomputed)) ||
        std::abs(rec.grad_recomputed - report.grad_norm) > tol * (1.0 + std::abs(rec.grad_recomputed)) ||
        rec.level_certificate != report.level_certificate ||
        rec.gradient_certificate != report.gradient_certificate) {
        throw std::runtime_error(
            "certify_minimax_report: stored and recomputed certificates disagree");
    }
    return rec;
}

}  // namespace dmp
