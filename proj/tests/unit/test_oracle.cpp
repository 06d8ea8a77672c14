#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "dmp/functional.hpp"
#include "dmp/oracle.hpp"
#include "dmp/reports.hpp"
#include "dmp/rng.hpp"
#include "support/oracles.hpp"

using namespace dmp;

namespace {

WeightFunction constant_weight(int m) {
    return WeightFunction{WeightFunction::Kind::constant, 0.0, m};
}

PotentialSpec desk_potential(double a = 2.5) {
    return PotentialSpec::trig_quadratic(6, a, 1.0, 1.0, constant_weight(6));
}

PeriodicSequence spike_mode(double A) { return PeriodicSequence({A, -A, 0.0, A, -A, 0.0}); }

PotentialSpec free_potential() {
    ScalarProfile zero;
    zero.g = [](double) { return 0.0; };
    zero.dg = [](double) { return 0.0; };
    zero.ddg = [](double) { return 0.0; };
    return PotentialSpec::custom(6, 1.0, constant_weight(6), zero);
}

}  // namespace

TEST_CASE("residual: zero sequence is stationary") {
    CHECK(residual(PeriodicSequence::zeros(6), desk_potential()) == 0.0);
}

TEST_CASE("residual: scalar ray root solves the full system") {
    const double A = testing::sine_slope_root(0.8, 1.0, 1.3);
    CHECK(residual(spike_mode(A), desk_potential()) <= 1e-10);
}

TEST_CASE("residual equals the direct componentwise maximum") {
    Rng rng(3);
    const PotentialSpec p = desk_potential();
    for (int trial = 0; trial < 100; ++trial) {
        PeriodicSequence u = PeriodicSequence::zeros(6);
        for (int s = 1; s <= 6; ++s) u.set(s, rng.uniform(-2.0, 2.0));
        double direct = 0.0;
        for (int n = 1; n <= 6; ++n) {
            direct = std::max(direct,
                              std::abs(u.at(n + 1) - 2.0 * u.at(n) + u.at(n - 1) +
                                       p.grad(n, u.at(n))));
        }
        CHECK(residual(u, p) == direct);
        CHECK(residual(u, p) >= 0.0);
    }
}

TEST_CASE("newton: fixed point returns unchanged fast") {
    const double A = testing::sine_slope_root(0.8, 1.0, 1.3);
    const NewtonResult res = newton_refine(spike_mode(A), desk_potential(), 1e-10, 10);
    CHECK(res.converged);
    CHECK(res.iterations <= 1);
    CHECK(distance(res.u, spike_mode(A)) <= 1e-10);
}

TEST_CASE("newton: converges from the unit-amplitude mode pattern") {
    const NewtonResult res = newton_refine(spike_mode(1.0), desk_potential(), 1e-12, 60);
    CHECK(res.converged);
    CHECK(res.residual <= 1e-12);
    const double A = testing::sine_slope_root(0.8, 1.0, 1.3);
    CHECK(distance(res.u, spike_mode(A)) <= 1e-9);
    CHECK_FALSE(res.singular_jacobian);
}

TEST_CASE("newton: quadratic convergence on the desk instance") {
    // Track residuals from a moderately close start; the decrease must be
    // at least quadratic-like once inside the basin.
    PeriodicSequence u = spike_mode(1.2);
    const PotentialSpec p = desk_potential();
    std::vector<double> residuals = {residual(u, p)};
    for (int k = 0; k < 6; ++k) {
        const NewtonResult step = newton_refine(u, p, 1e-15, 1);
        u = step.u;
        residuals.push_back(step.residual);
    }
    // r_{k+1} <= C r_k^2 with a modest constant on this instance.
    for (std::size_t k = 1; k + 1 < residuals.size(); ++k) {
        if (residuals[k] < 1e-2 && residuals[k] > 1e-14) {
            CHECK(residuals[k + 1] <= std::max(10.0 * residuals[k] * residuals[k], 5e-15));
        }
    }
    CHECK(residuals.back() <= 1e-13);
}

TEST_CASE("newton: resonant linearization at the origin is flagged singular") {
    // At a = 3 the linearization slope a K (2 mu - 1) = 3 matches a Laplacian
    // eigenvalue, so the Jacobian at the origin is singular.
    const PotentialSpec p = desk_potential(3.0);
    PeriodicSequence u0 = PeriodicSequence::zeros(6);
    u0.set(1, 1e-9);
    const NewtonResult res = newton_refine(u0, p, 1e-14, 3);
    CHECK(res.singular_jacobian);
    CHECK(res.condition_estimate > 1e8);
}

TEST_CASE("multistart: desk catalog holds the known orbits") {
    MultistartOptions options;
    options.random_starts = 500;
    const SolutionCatalog cat = multistart(desk_potential(), options, 2024);
    CHECK(cat.shift_symmetry);
    CHECK(cat.sign_symmetry);
    REQUIRE(!cat.entries.empty());

    // Zero solution present.
    bool has_zero = false;
    for (const auto& e : cat.entries) has_zero |= e.cls == SolutionClass::trivial_zero;
    CHECK(has_zero);

    // The mode orbit at the scalar-ray amplitude.
    const double A = testing::sine_slope_root(0.8, 1.0, 1.3);
    const CatalogMatch match = catalog_match(cat, spike_mode(A), 1e-6);
    CHECK(match.matched);

    // Every entry re-verifies against the admission tolerance and is a
    // critical point of the action.
    const FunctionalSpec action = FunctionalSpec::action(desk_potential());
    for (const auto& e : cat.entries) {
        CHECK(residual(e.u, desk_potential()) <= cat.admission_tol);
        CHECK(norm(action.gradient(e.u)) <= 1e-9);
        CHECK(std::abs(action.value(e.u) - e.phi_action) <= 1e-12 * (1.0 + std::abs(e.phi_action)));
    }

    // Entries are pairwise distinct beyond the dedup tolerance under the
    // symmetry orbit.
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        for (std::size_t j = i + 1; j < cat.entries.size(); ++j) {
            const CatalogMatch m = catalog_match(
                SolutionCatalog{cat.fingerprint, cat.admission_tol, cat.dedup_tol,
                                cat.shift_symmetry, cat.sign_symmetry, 0, 0,
                                {cat.entries[i]}},
                cat.entries[j].u, cat.dedup_tol);
            CHECK_FALSE(m.matched);
        }
    }
}

TEST_CASE("multistart: free system catalog contains only constants") {
    MultistartOptions options;
    options.random_starts = 100;
    const SolutionCatalog cat = multistart(free_potential(), options, 5);
    CHECK(!cat.entries.empty());
    for (const auto& e : cat.entries) {
        CHECK((e.cls == SolutionClass::constant || e.cls == SolutionClass::trivial_zero));
    }
}

TEST_CASE("multistart is deterministic under the seed") {
    MultistartOptions options;
    options.random_starts = 120;
    const SolutionCatalog a = multistart(desk_potential(), options, 99);
    const SolutionCatalog b = multistart(desk_potential(), options, 99);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("catalog match: exact entries and orbit representatives at distance zero") {
    MultistartOptions options;
    options.random_starts = 200;
    const SolutionCatalog cat = multistart(desk_potential(), options, 11);
    const double A = testing::sine_slope_root(0.8, 1.0, 1.3);
    const CatalogMatch exact = catalog_match(cat, spike_mode(A), 1e-6);
    REQUIRE(exact.matched);
    const PeriodicSequence entry = cat.entries[static_cast<std::size_t>(exact.entry_index)].u;
    CHECK(catalog_match(cat, entry, 1e-12).distance <= 1e-12);
    CHECK(catalog_match(cat, entry.shifted(2), 1e-12).distance <= 1e-12);
    CHECK(catalog_match(cat, -1.0 * entry, 1e-12).distance <= 1e-12);

    const SolutionCatalog empty{"", 1e-10, 1e-6, true, true, 0, 0, {}};
    CHECK_THROWS_AS(catalog_match(empty, entry, 1e-6), std::invalid_argument);
}

TEST_CASE("ray scan: the mode direction gives the sine-slope root") {
    const PeriodicSequence d({1.0, -1.0, 0.0, 1.0, -1.0, 0.0});
    const std::vector<double> roots = ray_critical_scan(desk_potential(), d, 0.0, 3.0);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == 0.0);
    const double A = roots[1];
    CHECK(std::abs(std::sin(A) - 0.8 * A) <= 1e-12);
    CHECK(A > 1.12);
    CHECK(A < 1.14);
    CHECK(residual(A * d, desk_potential()) <= 1e-10);
}

TEST_CASE("ray scan: the alternating direction has a nonzero root too") {
    // lambda = 4 reduces to sin t = 0.4 t, whose positive root sits near 2.13;
    // embedded it solves the full system.
    const PeriodicSequence d({1.0, -1.0, 1.0, -1.0, 1.0, -1.0});
    const std::vector<double> roots = ray_critical_scan(desk_potential(), d, 0.0, 3.0);
    REQUIRE(roots.size() == 2);
    const double expect = testing::sine_slope_root(0.4, 1.5, 3.0);
    CHECK(roots[1] == doctest::Approx(expect).epsilon(1e-10));
    CHECK(residual(roots[1] * d, desk_potential()) <= 1e-10);
}

TEST_CASE("ray scan rejects non-eigenvector and bad-entry directions") {
    CHECK_THROWS_AS(ray_critical_scan(desk_potential(),
                                      PeriodicSequence({1.0, 1.0, 0.0, 0.0, 0.0, 0.0}), 0.0, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ray_critical_scan(desk_potential(),
                                      PeriodicSequence({0.5, -0.5, 0.0, 0.5, -0.5, 0.0}), 0.0, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ray_critical_scan(desk_potential(), PeriodicSequence::zeros(6), 0.0, 2.0),
                    std::invalid_argument);
}

TEST_CASE("ray scan roots close the loop with newton refinement") {
    const PeriodicSequence d({1.0, -1.0, 0.0, 1.0, -1.0, 0.0});
    for (double root : ray_critical_scan(desk_potential(), d, 0.0, 3.0)) {
        const NewtonResult res = newton_refine(root * d, desk_potential(), 1e-12, 20);
        CHECK(res.converged);
        CHECK(distance(res.u, root * d) <= 1e-8);
    }
}
