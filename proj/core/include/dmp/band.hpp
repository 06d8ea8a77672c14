#pragma once

/**
 * @file band.hpp
 * @brief Deformation-band data around a level h: the fixed set D, the derived
 *        sets A, B, C, their distance oracles, the cutoff psi, and the
 *        normalized vector field.
 *
 * For a band height h and epsilon > 0:
 *   band = phi^{-1}([h - 2e, h + 2e])
 *   A    = band \ D
 *   B    = phi^{-1}([h - e,   h - e/2])   (psi = +1 here)
 *   C    = phi^{-1}([h + e/2, h + e])     (psi = -1 here)
 *   D    = a prescribed fixed set inside phi^{-1}([h - e/3, h + e/3])
 *
 * psi(v) = [dist(v,C) - dist(v,B)] dist(v, X\A) /
 *          ([dist(v,C) + dist(v,B)] dist(v, X\A) + dist(v,B) dist(v,C)),
 * clamped to 0 when the denominator falls below 1e-14 (the printed formula is
 * 0/0 exactly on degenerate corners; zero is the continuous limit from X\A).
 */

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dmp/rng.hpp"
#include "dmp/toy_landscape.hpp"

namespace dmp {

struct DSpec {
    enum class Kind { empty, mid_slab, level_set };
    Kind kind = Kind::empty;
    // mid_slab: phi^{-1}([h - e/3 + margin_lo, h + e/3 - margin_hi]).
    double margin_lo = 0.0;
    double margin_hi = 0.0;
    // level_set: the zero-width slab {phi = level}.
    double level = 0.0;

    static DSpec empty() { return {}; }
    static DSpec mid_slab(double margin_lo, double margin_hi);
    static DSpec level_set(double level);
};

std::string to_string(DSpec::Kind kind);

class BandSpec {
public:
    /// Validates D inside phi^{-1}([h - e/3, h + e/3]).
    BandSpec(double h, double eps, DSpec d);

    double h() const { return h_; }
    double eps() const { return eps_; }
    const DSpec& d_spec() const { return d_; }

    double band_lo() const { return h_ - 2.0 * eps_; }
    double band_hi() const { return h_ + 2.0 * eps_; }
    double b_lo() const { return h_ - eps_; }
    double b_hi() const { return h_ - 0.5 * eps_; }
    double c_lo() const { return h_ + 0.5 * eps_; }
    double c_hi() const { return h_ + eps_; }
    bool has_d() const { return d_.kind != DSpec::Kind::empty; }
    double d_lo() const;
    double d_hi() const;

    bool in_d(double phi_value) const;
    bool in_a(double phi_value) const;  // in the band and not in D

    double dist_to_b(const ToyLandscape& land, const Eigen::VectorXd& v) const;
    double dist_to_c(const ToyLandscape& land, const Eigen::VectorXd& v) const;
    double dist_to_d(const ToyLandscape& land, const Eigen::VectorXd& v) const;
    double dist_to_complement_of_a(const ToyLandscape& land, const Eigen::VectorXd& v) const;

    /// Interesting phi levels (set boundaries) for event detection.
    std::vector<double> event_levels() const;

private:
    double h_;
    double eps_;
    DSpec d_;
};

double psi_eval(const ToyLandscape& land, const BandSpec& band, const Eigen::VectorXd& v);

/// psi(v) grad(v) / |grad(v)|^2 on A, zero on X\A. |f| <= 1/(2 eps) wherever
/// the gradient hypothesis |grad phi| >= 2 eps holds.
Eigen::VectorXd vector_field_eval(const ToyLandscape& land, const BandSpec& band,
                                  const Eigen::VectorXd& v);

struct HypothesisReport {
    bool checked = false;
    bool holds_on_sample = false;
    double min_gradient_norm = 0.0;
    int samples = 0;
};

/// Samples |grad phi| >= 2 eps over the band phi^{-1}([h - 2e, h + 2e]).
HypothesisReport check_gradient_hypothesis(const ToyLandscape& land, const BandSpec& band,
                                           int samples, Rng& rng);

/// A point with the prescribed phi value (free coordinates drawn from rng).
Eigen::VectorXd point_at_level(const ToyLandscape& land, double level, Rng& rng);

}  // namespace dmp
