#pragma once

/**
 * @file toy_landscape.hpp
 * @brief Low-dimensional analytic stages for the deformation-flow harness.
 *
 * Each landscape provides the functional, its gradient, and exact distances to
 * level-band preimages phi^{-1}([lo, hi]) and their complements. The flow
 * verdicts are only meaningful against exact set geometry, which is why the
 * stage is a toy: distances to level bands of a general functional have no
 * closed form.
 *
 * Kinds:
 *   linear : phi(v) = v_1. Band distances are slab distances, exact.
 *   saddle : phi(v) = (v_1^2 - v_2^2) / 2. Band distances reduce to
 *            point-to-hyperbola distances in rotated coordinates, computed by
 *            safeguarded 1D minimization to ~1e-12.
 */

#include <Eigen/Dense>

namespace dmp {

class ToyLandscape {
public:
    enum class Kind { linear, saddle };

    static ToyLandscape linear(int dimension);
    static ToyLandscape saddle(int dimension);  // requires dimension >= 2

    Kind kind() const { return kind_; }
    int dimension() const { return dimension_; }

    double value(const Eigen::VectorXd& v) const;
    Eigen::VectorXd gradient(const Eigen::VectorXd& v) const;

    /// dist(v, phi^{-1}([lo, hi])); zero when phi(v) lies in [lo, hi].
    double dist_to_band(const Eigen::VectorXd& v, double lo, double hi) const;

    /// dist(v, X \ phi^{-1}([lo, hi])); zero when phi(v) lies outside (lo, hi).
    double dist_to_band_complement(const Eigen::VectorXd& v, double lo, double hi) const;

private:
    ToyLandscape(Kind kind, int dimension) : kind_(kind), dimension_(dimension) {}

    double dist_to_level(const Eigen::VectorXd& v, double level) const;

    Kind kind_;
    int dimension_;
};

}  // namespace dmp
