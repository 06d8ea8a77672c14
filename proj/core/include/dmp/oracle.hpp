#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground truth for the second-order difference system
 *        Delta^2 u_{n-1} + dF/dx(n, u_n) = 0: residuals, damped-Newton
 *        polishing, multistart cataloging, and the invariant-ray scalar
 *        reduction.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "dmp/potential.hpp"
#include "dmp/sequence.hpp"

namespace dmp {

/// max over n of |Delta^2 u_{n-1} + dF/dx(n, u_n)|.
double residual(const PeriodicSequence& u, const PotentialSpec& p);

struct NewtonResult {
    PeriodicSequence u;
    double residual = 0.0;
    bool converged = false;
    int iterations = 0;
    bool singular_jacobian = false;   // rank-deficiency seen at some iterate
    double condition_estimate = 0.0;  // worst sigma_max / sigma_min observed
};

/// Damped Newton on the residual map. The Jacobian is assembled analytically
/// (circulant +1, -2, +1 stencil plus the diagonal d2F/dx2). Rank-deficient
/// Jacobians fall back to the minimum-norm least-squares step and are flagged
/// with a condition estimate.
NewtonResult newton_refine(const PeriodicSequence& u0, const PotentialSpec& p, double tol = 1e-12,
                           int max_iter = 60);

enum class SolutionClass { trivial_zero, constant, nontrivial };
std::string to_string(SolutionClass c);

struct CatalogEntry {
    PeriodicSequence u;
    double residual = 0.0;
    double phi_action = 0.0;  // value of the full discrete action
    SolutionClass cls = SolutionClass::nontrivial;
};

struct SolutionCatalog {
    std::string fingerprint;
    double admission_tol = 0.0;
    double dedup_tol = 0.0;
    bool shift_symmetry = false;  // cyclic shifts of solutions solve too
    bool sign_symmetry = false;   // -u solves too
    int starts_attempted = 0;
    int starts_converged = 0;
    std::vector<CatalogEntry> entries;  // sorted by (phi_action, values)
};

struct MultistartOptions {
    double box_halfwidth = 3.0;
    int random_starts = 500;
    double tol = 1e-10;
    double dedup_tol = 1e-6;
    int newton_max_iter = 80;
};

/// Newton from random starts in the box plus structured starts on Laplacian
/// eigenvector rays with entries in {0, +-1} at amplitudes {0.5, 1, 1.5, 2}.
/// Converged points are deduplicated under the cyclic-shift / sign orbit
/// (whichever symmetries the potential actually has) and classified.
SolutionCatalog multistart(const PotentialSpec& p, const MultistartOptions& options,
                           std::uint64_t seed);

/// Orbit-aware nearest catalog entry.
struct CatalogMatch {
    int entry_index = -1;
    double distance = 0.0;
    bool matched = false;  // distance <= tol
};
CatalogMatch catalog_match(const SolutionCatalog& catalog, const PeriodicSequence& u, double tol);

/// On a Laplacian-eigenvector ray with entries in {0, +-1}, a constant weight,
/// and an x-even potential, the full system collapses to the scalar equation
/// lambda t = dF/dx(1, t). Returns every root in [t_lo, t_hi] found by
/// sign-change bisection on the scan grid (t = 0 is always a root and is
/// included whenever the range covers it).
std::vector<double> ray_critical_scan(const PotentialSpec& p, const PeriodicSequence& direction,
                                      double t_lo, double t_hi, int scan_points = 10000);

}  // namespace dmp
