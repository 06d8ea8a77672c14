#pragma once

/**
 * @file deformation.hpp
 * @brief Deformation flows on toy landscapes and the empirical verdict
 *        harness for the band construction and the classical descent one.
 *
 * The band flow integrates dv/dt = psi(v) grad(v)/|grad(v)|^2 (zero outside A)
 * for duration 2 eps; eta is the time-2eps map. Along any trajectory the
 * identity d/dt phi(sigma(t)) = psi(sigma(t)) holds by the chain rule, and the
 * trace records both sides.
 *
 * The harness never hard-asserts the two band inclusions; it emits pass/fail
 * verdicts with per-sample witnesses (start, initial phi, final phi). Fails
 * are data, not exceptions.
 */

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dmp/band.hpp"
#include "dmp/functional.hpp"
#include "dmp/ode.hpp"
#include "dmp/sequence.hpp"
#include "dmp/toy_landscape.hpp"

namespace dmp {

struct FlowTrace {
    Eigen::VectorXd start;
    std::vector<double> t;
    std::vector<Eigen::VectorXd> state;
    std::vector<double> phi;
    std::vector<double> psi;        // band flow: psi; descent flow: d phi / dt
    std::vector<double> dphi_dt;    // analytic derivative along the trajectory
    double max_err_est = 0.0;
    OdeStatus status = OdeStatus::ok;
    std::string message;

    const Eigen::VectorXd& final_state() const { return state.back(); }
    double final_phi() const { return phi.back(); }
};

/// Integrate the band vector field from v for the given duration.
FlowTrace flow(const ToyLandscape& land, const BandSpec& band, const Eigen::VectorXd& v,
               double duration, double tol = 1e-9);

struct SampleVerdict {
    Eigen::VectorXd start;
    double phi_initial = 0.0;
    double phi_final = 0.0;
    bool pass = false;
};

struct ConclusionVerdict {
    std::string name;
    bool pass = false;  // all samples pass
    std::vector<SampleVerdict> samples;
};

struct DeformationVerdict {
    double h = 0.0;
    double eps = 0.0;
    std::string d_kind;
    HypothesisReport hypothesis;
    ConclusionVerdict fixed_points;        // eta(u) = u off the moving set
    ConclusionVerdict upward_inclusion;    // lower band B lands in [h+e, h+3e/2]
    ConclusionVerdict downward_inclusion;  // upper band C lands in [h-3e/2, h-e]
};

/// Flow duration-2eps samples from B, C, D, and the far field; record where
/// they land. Sampling is deterministic in the seed.
DeformationVerdict verify_band_deformation(const ToyLandscape& land, const BandSpec& band,
                                           int samples_per_set, std::uint64_t seed,
                                           double tol = 1e-9);

/// Classical descent deformation: field -chi(phi) grad/|grad|^2 with a
/// piecewise-linear cutoff chi (1 on [c-e, c+e], 0 outside [c-2e, c+2e]).
FlowTrace descent_flow(const ToyLandscape& land, double c, double eps, const Eigen::VectorXd& v,
                       double tol = 1e-9);

struct DescentVerdict {
    double c = 0.0;
    double eps = 0.0;
    bool pass = false;  // every start with phi <= c+e lands at phi <= c-e + tol
    std::vector<SampleVerdict> samples;
};

DescentVerdict verify_descent_deformation(const ToyLandscape& land, double c, double eps,
                                          int samples, std::uint64_t seed, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Monte-Carlo band distance in sequence space
// ---------------------------------------------------------------------------
//
// Level bands of a functional on the sequence space have no closed-form
// distance, so verdicts stay on the toy stages. For demos, a sampled cloud of
// band points gives an approximate (one-sided: never below the true) distance.

struct BandCloud {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<PeriodicSequence> points;  // all with lo <= phi <= hi
};

/// Sample band points by bisecting phi along random rays from the origin.
/// Rays that never enter the band within the radius are skipped (counted into
/// the attempts, so the cloud may be smaller than `count`).
BandCloud sample_band_cloud(const Objective& f, double lo, double hi, int count, double radius,
                            std::uint64_t seed);

/// Nearest-neighbor distance to the cloud; an upper bound on the distance to
/// the band, approximate by construction.
double cloud_distance(const BandCloud& cloud, const PeriodicSequence& u);

}  // namespace dmp
