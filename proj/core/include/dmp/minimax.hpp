#pragma once

/**
 * @file minimax.hpp
 * @brief Constrained path-minimax solver: relax an ensemble of pinned paths,
 *        estimate the pass value c_hat, and extract a near-critical point
 *        u_hat with the two certificates
 *
 *          (i)  c_hat - 2 eps <= phi(u_hat) <= c_hat + 2 eps
 *          (ii) |grad phi(u_hat)| < 2 eps.
 *
 * The estimate is local: the ensemble relaxes from perturbed copies of the
 * piecewise-linear seed and reports the best converged member. Global
 * optimality of c_hat is out of scope by design.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmp/functional.hpp"
#include "dmp/path.hpp"
#include "dmp/sequence.hpp"

namespace dmp {

struct MemberDiagnostics {
    int index = 0;
    bool converged = false;            // path-max stalled at the final refinement level
    bool certificate_bearing = false;  // gradient at the max knot below 2 eps
    double final_max = 0.0;
    double grad_at_max = 0.0;
    int iterations = 0;
};

struct MinimaxReport {
    double c_hat = 0.0;
    PeriodicSequence u_hat;
    double phi_value = 0.0;
    double grad_norm = 0.0;
    double epsilon = 0.0;
    bool level_certificate = false;     // (i)
    bool gradient_certificate = false;  // (ii)
    double c1_diagnostic = 0.0;         // max(phi(0), phi(e))
    double e1_level = 0.0;              // phi(e1)
    int iterations = 0;                 // total relax steps across the ensemble
    int knots_final = 0;
    int ensemble = 0;
    std::uint64_t seed = 0;
    std::vector<MemberDiagnostics> members;
    std::vector<double> c_hat_trace;    // running best path-max, non-increasing
    std::vector<PeriodicSequence> best_path;
};

struct SolveBudgets {
    int n_segments = 64;
    int ensemble = 8;
    int max_iterations = 600;   // per member and refinement level
    int stall_window = 12;
    double stall_rtol = 1e-10;
    int refine_doublings = 1;
    double jitter = 1e-6;       // seed perturbation, relative to |e|
    RelaxOptions relax;
};

/// Requires a valid geometry: phi(0) < phi(e) = phi(e1) and |e1| < r < |e|.
/// Deterministic in (budgets, seed). If no ensemble member earns certificate
/// (ii) within budget, the report carries failed certificates and diagnostics
/// rather than throwing.
MinimaxReport mountain_pass_solve(const Objective& f, const MountainGeometry& geometry, double eps,
                                  const SolveBudgets& budgets, std::uint64_t seed);

struct CertificateRecord {
    double phi_recomputed = 0.0;
    double grad_recomputed = 0.0;
    bool level_certificate = false;
    bool gradient_certificate = false;
};

/// Recompute phi(u_hat) and |grad phi(u_hat)| from scratch and re-check both
/// inequalities against the reported c_hat and eps. Throws when the recomputed
/// numbers or verdicts disagree with the stored ones beyond 1e-12.
CertificateRecord certify_minimax_report(const MinimaxReport& report, const Objective& f);

/// Evaluate the certificates for a (u_hat, c_hat, eps) triple; used both by
/// the solver and by callers re-deriving a report for a modified point.
CertificateRecord evaluate_certificates(const Objective& f, const PeriodicSequence& u_hat,
                                        double c_hat, double eps);

}  // namespace dmp
