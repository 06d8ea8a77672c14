#pragma once

/**
 * @file functional.hpp
 * @brief Action functionals on the space of M-periodic sequences, their
 *        analytic gradients, mountain-geometry constructions, and the
 *        upper-bound / norm-bound sweep checks.
 *
 * Two functionals are first-class:
 *
 *   action      : phi(u) = 1/2 sum_s (Delta u_s)^2 - sum_s F(s, u_s).
 *                 Its critical points solve the second-order difference
 *                 system Delta^2 u_{n-1} + dF/dx(n, u_n) = 0 at every index.
 *
 *   single_site : phi(u) = 1/2 sum_s (Delta u_s)^2 - F(n*, u_{n*})
 *                          - sum_{s != n*} u_s^2.
 *                 The potential acts at one distinguished site n*; every other
 *                 coordinate carries a plain quadratic well. With spike
 *                 vectors scaled by sqrt(growth), this makes the pinned-level
 *                 identities phi(e) = phi(e1) = growth * scale^2 exact.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmp/conditions.hpp"
#include "dmp/potential.hpp"
#include "dmp/sequence.hpp"

namespace dmp {

/// Minimal objective interface consumed by the path solver and the sphere
/// infimum estimator. Implementations must be pure (safe to call concurrently).
class Objective {
public:
    virtual ~Objective() = default;
    virtual int period() const = 0;
    virtual double value(const PeriodicSequence& u) const = 0;
    virtual PeriodicSequence gradient(const PeriodicSequence& u) const = 0;
};

class FunctionalSpec : public Objective {
public:
    enum class Kind { action, single_site };

    static FunctionalSpec action(PotentialSpec potential);

    /// Requires 1 <= distinguished_index <= M and growth above half the top
    /// Laplacian eigenvalue (the admissible growth range).
    static FunctionalSpec single_site(PotentialSpec potential, int distinguished_index,
                                      double growth);

    Kind kind() const { return kind_; }
    const PotentialSpec& potential() const { return potential_; }
    int distinguished_index() const { return distinguished_index_; }
    double growth() const { return growth_; }

    int period() const override { return potential_.period(); }
    double value(const PeriodicSequence& u) const override;
    PeriodicSequence gradient(const PeriodicSequence& u) const override;

private:
    explicit FunctionalSpec(PotentialSpec p) : potential_(std::move(p)) {}

    Kind kind_ = Kind::action;
    PotentialSpec potential_;
    int distinguished_index_ = 1;
    double growth_ = 0.0;
};

inline double phi_eval(const FunctionalSpec& f, const PeriodicSequence& u) { return f.value(u); }
inline PeriodicSequence phi_grad(const FunctionalSpec& f, const PeriodicSequence& u) {
    return f.gradient(u);
}

// ---------------------------------------------------------------------------
// Mountain geometry
// ---------------------------------------------------------------------------

struct MountainGeometry {
    PeriodicSequence e;
    PeriodicSequence e1;
    double r = 0.0;      // strictly between |e1| and |e|
    double level = 0.0;  // phi(e) = phi(e1)
    double scale = 0.0;  // spike scale (spike construction only)
};

/// Two- and three-entry spike vectors around the distinguished site, entries
/// +-sqrt(growth) * scale. Verifies phi(e) = phi(e1) = growth * scale^2 and
/// phi(0) = 0 to 1e-10; r is the geometric mean of the two norms.
/// Requires a single_site functional, M >= 6, scale > 0.
MountainGeometry build_spike_geometry(const FunctionalSpec& f, double scale);

/// Level crossings of the ray profile t -> phi(t * direction): e1 = t1 * d and
/// e = t2 * d with t1 < t2 and |phi - level| <= 1e-10 at both (bisection).
/// Fails if the profile never rises above `level` on (0, t_max].
MountainGeometry find_ray_geometry(const FunctionalSpec& f, const PeriodicSequence& direction,
                                   double level, double t_max = 8.0, int scan_points = 4096);

// ---------------------------------------------------------------------------
// Upper-bound and norm-bound sweeps
// ---------------------------------------------------------------------------

struct PsConstants {
    GrowthConstants growth;  // (radius, offset, growth) certified upstream
    double w = 0.0;          // max |F - growth x^2 + offset| over |x| <= radius
    double wprime = 0.0;     // w + offset
};

/// Realizes w by a 1D grid scan over n in [1, M], |x| <= radius.
PsConstants derive_ps_constants(const PotentialSpec& p, const GrowthConstants& growth,
                                int scan_points = 10001);

struct SweepReport {
    int samples = 0;
    int violations = 0;
    double max_slack = 0.0;    // max over satisfied samples of bound - phi
    double worst_margin = 0.0; // min over samples of bound - phi (negative on violation)
    std::string note;
};

/// Checks phi(u) <= (lambda_max/2 - growth) |u|^2 + wprime  (single_site kind)
/// or the same with M * wprime (action kind) at every sample.
SweepReport coercivity_check(const FunctionalSpec& f, const PsConstants& c,
                             std::span<const PeriodicSequence> samples);

/// Checks the implication phi(u) >= -m1  =>  |u|^2 <= (growth - lambda_max/2)^{-1}
/// * (wprime + m1) (single_site) or with M * wprime (action). Samples with
/// phi(u) < -m1 are exempt. The norm bound uses wprime = w + offset throughout.
SweepReport palais_smale_check(const FunctionalSpec& f, const PsConstants& c, double m1,
                               std::span<const PeriodicSequence> samples);

// ---------------------------------------------------------------------------
// Sphere infimum diagnostic
// ---------------------------------------------------------------------------

/// Upper bound on inf over |u| = r of phi(u) via projected local descent from
/// seeded random starts. Diagnostic only; no solver consumes the result.
double estimate_sphere_infimum(const Objective& f, double r, int restarts, std::uint64_t seed);

}  // namespace dmp
