#pragma once

/**
 * @file conditions.hpp
 * @brief Sampling-based checkers for the structural hypotheses on F(n, x).
 *
 * Verdicts are "holds on the sample grid" or "fails with a concrete witness";
 * nothing here is a symbolic proof. A fails verdict always carries a witness
 * point at which re-evaluating F reproduces the violation.
 *
 * Checked hypotheses:
 *   nonneg_periodic        : F >= 0 and F(n+M, x) = F(n, x)
 *   smooth_nonneg_periodic : as above (smoothness is analytic for built-ins)
 *   zero_at_origin         : F(n, 0) = 0 for all n
 *   near_origin_bound      : F(n,x) <= alpha x^2 for |x| <= delta, with
 *                            alpha < 1 - cos(2 pi / M)
 *   growth_bound           : F(n,x) >= growth * x^2 - offset for |x| >= radius,
 *                            with growth above half the top Laplacian eigenvalue
 */

#include <array>
#include <optional>
#include <string>

#include "dmp/potential.hpp"

namespace dmp {

enum class ConditionId {
    smooth_nonneg_periodic,
    nonneg_periodic,
    zero_at_origin,
    near_origin_bound,
    growth_bound,
};

std::string to_string(ConditionId id);

struct ConditionWitness {
    int n = 0;
    double x = 0.0;
    double F_value = 0.0;
    double bound_value = 0.0;  // the bound F violated at (n, x)
};

struct GrowthConstants {
    double radius = 0.0;  // check only |x| >= radius
    double offset = 0.0;  // subtracted constant
    double growth = 0.0;  // quadratic coefficient
};

struct ConditionReport {
    ConditionId id{};
    bool holds_on_sample = false;
    std::optional<ConditionWitness> witness;         // present on fails
    std::optional<double> alpha, delta;              // near_origin_bound constants
    std::optional<GrowthConstants> growth_constants; // growth_bound constants
    std::string note;
};

struct ConditionCheckParams {
    int x_samples = 2001;    // grid points per scan
    double x_max = 50.0;     // half-width for nonnegativity scans
    // near_origin_bound: candidate (alpha, delta); auto-fitted when absent.
    std::optional<std::pair<double, double>> near_origin_candidate;
    // growth_bound: candidate (radius, offset, growth); auto-fitted when absent.
    std::optional<GrowthConstants> growth_candidate;
    double growth_x_max = 100.0;
    int growth_samples = 10000;
};

ConditionReport check_condition(const PotentialSpec& p, ConditionId id,
                                const ConditionCheckParams& params = {});

}  // namespace dmp
