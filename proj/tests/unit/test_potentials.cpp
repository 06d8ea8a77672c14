#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dmp/conditions.hpp"
#include "dmp/potential.hpp"
#include "dmp/rng.hpp"

using namespace dmp;

namespace {

WeightFunction constant_weight(int m, double amp = 0.0) {
    return WeightFunction{WeightFunction::Kind::constant, amp, m};
}

WeightFunction cosine_weight(int m, double amp) {
    return WeightFunction{WeightFunction::Kind::cosine, amp, m};
}

PotentialSpec desk_potential() {
    return PotentialSpec::trig_quadratic(6, 2.5, 1.0, 1.0, constant_weight(6));
}

}  // namespace

TEST_CASE("checked parameter ranges") {
    CHECK_THROWS_AS(PotentialSpec::trig_quadratic(6, 2.5, 0.5, 1.0, constant_weight(6)),
                    std::invalid_argument);  // mu must exceed 1/2
    CHECK_THROWS_AS(PotentialSpec::trig_quadratic(4, 2.5, 1.0, 1.0, constant_weight(4)),
                    std::invalid_argument);  // period >= 6
    CHECK_THROWS_AS(PotentialSpec::trig_quadratic(6, 1.9, 1.0, 1.0, constant_weight(6)),
                    std::invalid_argument);  // a > 2 for even periods
    CHECK_THROWS_AS(PotentialSpec::trig_quadratic_half(7, 3.5, 1.0, constant_weight(7)),
                    std::invalid_argument);  // a > 2(1 + cos(pi/7)) ~ 3.80 for M=7
    CHECK_NOTHROW(PotentialSpec::trig_quadratic_half(7, 3.9, 1.0, constant_weight(7)));
    CHECK_THROWS_AS(PotentialSpec::trig_quadratic(6, 2.5, 1.0, 1.0, constant_weight(6, 1.5)),
                    std::invalid_argument);  // |rho| < K
    CHECK_THROWS_AS(PotentialSpec::trig_quadratic(6, 2.5, 1.0, -1.0, constant_weight(6)),
                    std::invalid_argument);  // K > 0
}

TEST_CASE("eval at pinned points") {
    const PotentialSpec p2 = PotentialSpec::trig_quadratic(6, 3.0, 1.0, 1.0, constant_weight(6));
    for (int n = 1; n <= 6; ++n) {
        CHECK(p2.eval(n, 0.0) == 0.0);
        CHECK(p2.grad(n, 0.0) == 0.0);
    }
    const double two_pi = 2.0 * std::numbers::pi;
    // 3 (mu (2 pi)^2 + cos(2 pi) - 1) = 12 pi^2.
    CHECK(p2.eval(1, two_pi) == doctest::Approx(12.0 * std::numbers::pi * std::numbers::pi)
                                    .epsilon(1e-12));

    const PotentialSpec p1 = PotentialSpec::trig_quadratic_half(6, 3.0, 1.0, constant_weight(6));
    // 3 (pi^2 / 2 - 2).
    CHECK(p1.eval(2, std::numbers::pi) ==
          doctest::Approx(3.0 * (std::numbers::pi * std::numbers::pi / 2.0 - 2.0)).epsilon(1e-12));
}

TEST_CASE("analytic gradient matches central differences") {
    Rng rng(31);
    const PotentialSpec specs[] = {
        desk_potential(),
        PotentialSpec::trig_quadratic_half(7, 3.9, 1.0, cosine_weight(7, 0.5)),
        PotentialSpec::trig_quadratic(8, 2.2, 0.8, 2.0, cosine_weight(8, 1.0)),
    };
    for (const auto& p : specs) {
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng.uniform01() * p.period());
            const double x = rng.uniform(-20.0, 20.0);
            const double h = 1e-5;
            const double fd = (p.eval(n, x + h) - p.eval(n, x - h)) / (2.0 * h);
            const double an = p.grad(n, x);
            CHECK(std::abs(an - fd) / (1.0 + std::abs(an)) <= 1e-6);
        }
    }
}

TEST_CASE("second derivative matches central differences of the gradient") {
    Rng rng(32);
    const PotentialSpec p = desk_potential();
    for (int trial = 0; trial < 200; ++trial) {
        const double x = rng.uniform(-10.0, 10.0);
        const double h = 1e-5;
        const double fd = (p.grad(1, x + h) - p.grad(1, x - h)) / (2.0 * h);
        CHECK(std::abs(p.grad2(1, x) - fd) / (1.0 + std::abs(fd)) <= 1e-6);
    }
}

TEST_CASE("periodicity in n") {
    Rng rng(33);
    const PotentialSpec specs[] = {desk_potential(),
                                   PotentialSpec::trig_quadratic(6, 2.5, 1.0, 1.0,
                                                                 cosine_weight(6, 0.7))};
    for (const auto& p : specs) {
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng.uniform01() * 3 * p.period());
            const double x = rng.uniform(-30.0, 30.0);
            const double f = p.eval(n, x);
            CHECK(std::abs(p.eval(n + p.period(), x) - f) <= 1e-12 * (1.0 + std::abs(f)));
        }
    }
}

TEST_CASE("weight kinds") {
    const WeightFunction w = cosine_weight(6, 0.5);
    CHECK(w.value(0.0) == doctest::Approx(0.5));
    CHECK(w.value(3.0) == doctest::Approx(-0.5));
    CHECK(w.value(1.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w.value(7.5) == doctest::Approx(w.value(1.5)).epsilon(1e-12));
}

TEST_CASE("nonnegativity and origin conditions hold on the desk instance") {
    const PotentialSpec p = desk_potential();
    CHECK(check_condition(p, ConditionId::nonneg_periodic).holds_on_sample);
    CHECK(check_condition(p, ConditionId::smooth_nonneg_periodic).holds_on_sample);
    CHECK(check_condition(p, ConditionId::zero_at_origin).holds_on_sample);
}

TEST_CASE("near-origin bound fails on the desk instance with a reproducible witness") {
    const PotentialSpec p = desk_potential();
    const ConditionReport rep = check_condition(p, ConditionId::near_origin_bound);
    CHECK_FALSE(rep.holds_on_sample);
    REQUIRE(rep.witness.has_value());
    // F/x^2 tends to a(mu - 1/2) K = 1.25 near zero, above 1 - cos(2 pi/6) = 0.5.
    const double x = rep.witness->x;
    const double threshold = 1.0 - std::cos(2.0 * std::numbers::pi / 6.0);
    CHECK(p.eval(rep.witness->n, x) == doctest::Approx(rep.witness->F_value).epsilon(1e-15));
    CHECK(rep.witness->F_value > threshold * x * x);
    CHECK(p.eval(rep.witness->n, 1e-3) / 1e-6 == doctest::Approx(1.25).epsilon(1e-4));
}

TEST_CASE("near-origin bound holds for a slow quadratic potential") {
    // mu close to 1/2 keeps the near-origin slope a(mu - 1/2)(rho + K) below
    // the threshold, so the verdict is per-instance rather than assumed.
    const PotentialSpec p =
        PotentialSpec::trig_quadratic(6, 2.5, 0.55, 1.0, constant_weight(6));
    const ConditionReport rep = check_condition(p, ConditionId::near_origin_bound);
    CHECK(rep.holds_on_sample);
    REQUIRE(rep.alpha.has_value());
    CHECK(*rep.alpha < 1.0 - std::cos(2.0 * std::numbers::pi / 6.0));
    CHECK(*rep.alpha > 0.0);
}

TEST_CASE("growth bound with candidate constants on the desk instance") {
    const PotentialSpec p = desk_potential();
    ConditionCheckParams params;
    params.growth_candidate = GrowthConstants{3.0, 5.0, 2.4};
    const ConditionReport rep = check_condition(p, ConditionId::growth_bound, params);
    CHECK(rep.holds_on_sample);  // F >= 2.5 x^2 - 5 >= 2.4 x^2 - 5
    REQUIRE(rep.growth_constants.has_value());
    CHECK(rep.growth_constants->growth == 2.4);
}

TEST_CASE("growth bound rejects a coefficient at or below half the top eigenvalue") {
    const PotentialSpec p = desk_potential();
    ConditionCheckParams params;
    params.growth_candidate = GrowthConstants{3.0, 5.0, 2.0};  // lambda_max/2 = 2 for M=6
    CHECK_THROWS_AS(check_condition(p, ConditionId::growth_bound, params), std::invalid_argument);
}

TEST_CASE("growth bound auto fit certifies the desk instance") {
    const PotentialSpec p = desk_potential();
    const ConditionReport rep = check_condition(p, ConditionId::growth_bound);
    CHECK(rep.holds_on_sample);
    REQUIRE(rep.growth_constants.has_value());
    // Asymptotic slope is a mu K = 2.5; the fit backs off a little and must
    // clear lambda_max / 2 = 2 with a usable offset.
    CHECK(rep.growth_constants->growth > 2.0);
    CHECK(rep.growth_constants->growth <= 2.5);
    CHECK(rep.growth_constants->offset > 0.0);
    CHECK(rep.growth_constants->offset <= 2.0 * 2.5 * 1.0 + 1e-6);  // 2 a K bound
}

TEST_CASE("growth bound fails with a witness when the candidate is too steep") {
    const PotentialSpec p = desk_potential();
    ConditionCheckParams params;
    params.growth_candidate = GrowthConstants{0.5, 1.0, 2.6};  // above the true slope 2.5
    const ConditionReport rep = check_condition(p, ConditionId::growth_bound, params);
    CHECK_FALSE(rep.holds_on_sample);
    REQUIRE(rep.witness.has_value());
    const auto& w = *rep.witness;
    CHECK(p.eval(w.n, w.x) == doctest::Approx(w.F_value).epsilon(1e-15));
    CHECK(w.F_value < w.bound_value);
}

TEST_CASE("profile of the near-origin/growth verdicts matches the design instance") {
    // The design instance satisfies everything except the near-origin bound.
    const PotentialSpec p = desk_potential();
    ConditionCheckParams params;
    params.growth_candidate = GrowthConstants{3.0, 5.0, 2.4};
    CHECK(check_condition(p, ConditionId::nonneg_periodic).holds_on_sample);
    CHECK(check_condition(p, ConditionId::zero_at_origin).holds_on_sample);
    CHECK(check_condition(p, ConditionId::growth_bound, params).holds_on_sample);
    CHECK_FALSE(check_condition(p, ConditionId::near_origin_bound).holds_on_sample);
}

TEST_CASE("custom zero profile gives the free system") {
    ScalarProfile zero;
    zero.g = [](double) { return 0.0; };
    zero.dg = [](double) { return 0.0; };
    const PotentialSpec p = PotentialSpec::custom(6, 1.0, constant_weight(6), zero);
    CHECK(p.eval(3, 17.0) == 0.0);
    CHECK(p.grad(3, 17.0) == 0.0);
    CHECK(p.even_in_x());
    CHECK(p.autonomous());
}

TEST_CASE("fingerprint distinguishes instances") {
    const PotentialSpec a = desk_potential();
    const PotentialSpec b = PotentialSpec::trig_quadratic(6, 2.6, 1.0, 1.0, constant_weight(6));
    CHECK(a.fingerprint() != b.fingerprint());
    CHECK(a.fingerprint() == desk_potential().fingerprint());
}
