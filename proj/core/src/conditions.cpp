#include "dmp/conditions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dmp/spectrum.hpp"

namespace dmp {

std::string to_string(ConditionId id) {
    switch (id) {
        case ConditionId::smooth_nonneg_periodic: return "smooth_nonneg_periodic";
        case ConditionId::nonneg_periodic: return "nonneg_periodic";
        case ConditionId::zero_at_origin: return "zero_at_origin";
        case ConditionId::near_origin_bound: return "near_origin_bound";
        case ConditionId::growth_bound: return "growth_bound";
    }
    throw std::logic_error("ConditionId: unknown");
}

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    }
    return out;
}

ConditionReport check_nonneg_periodic(const PotentialSpec& p, ConditionId id,
                                      const ConditionCheckParams& params) {
    ConditionReport rep;
    rep.id = id;
    const int m = p.period();
    for (int n = 1; n <= m; ++n) {
        for (double x : linspace(-params.x_max, params.x_max, params.x_samples)) {
            const double f = p.eval(n, x);
            if (f < -1e-12) {
                rep.holds_on_sample = false;
                rep.witness = ConditionWitness{n, x, f, 0.0};
                rep.note = "F(n,x) < 0 at witness";
                return rep;
            }
            const double fp = p.eval(n + m, x);
            if (std::abs(fp - f) > 1e-12 * (1.0 + std::abs(f))) {
                rep.holds_on_sample = false;
                rep.witness = ConditionWitness{n, x, fp, f};
                rep.note = "F(n+M,x) != F(n,x) at witness";
                return rep;
            }
        }
    }
    rep.holds_on_sample = true;
    return rep;
}

ConditionReport check_zero_at_origin(const PotentialSpec& p) {
    ConditionReport rep;
    rep.id = ConditionId::zero_at_origin;
    for (int n = 1; n <= p.period(); ++n) {
        const double f = p.eval(n, 0.0);
        if (std::abs(f) > 1e-12) {
            rep.holds_on_sample = false;
            rep.witness = ConditionWitness{n, 0.0, f, 0.0};
            rep.note = "F(n,0) != 0";
            return rep;
        }
    }
    rep.holds_on_sample = true;
    return rep;
}

ConditionReport check_near_origin_bound(const PotentialSpec& p,
                                        const ConditionCheckParams& params) {
    ConditionReport rep;
    rep.id = ConditionId::near_origin_bound;
    const int m = p.period();
    const double threshold = 1.0 - std::cos(2.0 * std::numbers::pi / m);

    // Supremum of F/x^2 over small |x|; the fine points 1e-3 and 1e-2 act as
    // the Taylor-limit estimate near the origin.
    auto sup_ratio = [&](double delta, ConditionWitness& worst) {
        double sup = 0.0;
        std::vector<double> xs = {1e-3, 1e-2};
        for (double x : linspace(delta / 100.0, delta, 200)) xs.push_back(x);
        for (int n = 1; n <= m; ++n) {
            for (double ax : xs) {
                if (ax > delta) continue;
                for (double x : {ax, -ax}) {
                    const double ratio = p.eval(n, x) / (x * x);
                    if (ratio > sup) {
                        sup = ratio;
                        worst = ConditionWitness{n, x, p.eval(n, x), threshold * x * x};
                    }
                }
            }
        }
        return sup;
    };

    if (params.near_origin_candidate) {
        const auto [alpha, delta] = *params.near_origin_candidate;
        if (!(alpha > 0.0 && alpha < threshold)) {
            throw std::invalid_argument("near_origin_bound: alpha outside (0, 1 - cos(2 pi / M))");
        }
        if (!(delta > 0.0)) throw std::invalid_argument("near_origin_bound: delta must be positive");
        for (int n = 1; n <= m; ++n) {
            for (double x : linspace(-delta, delta, params.x_samples)) {
                if (x == 0.0) continue;
                const double f = p.eval(n, x);
                if (f > alpha * x * x + 1e-14) {
                    rep.holds_on_sample = false;
                    rep.witness = ConditionWitness{n, x, f, alpha * x * x};
                    rep.alpha = alpha;
                    rep.delta = delta;
                    rep.note = "F(n,x) > alpha x^2 at witness";
                    return rep;
                }
            }
        }
        rep.holds_on_sample = true;
        rep.alpha = alpha;
        rep.delta = delta;
        return rep;
    }

    // Auto mode: shrink delta geometrically looking for an admissible alpha.
    ConditionWitness worst{};
    double delta = 1.0;
    for (int k = 0; k < 7; ++k, delta /= 10.0) {
        const double sup = sup_ratio(delta, worst);
        if (sup < threshold) {
            rep.holds_on_sample = true;
            rep.alpha = 0.5 * (sup + threshold);
            rep.delta = delta;
            return rep;
        }
    }
    rep.holds_on_sample = false;
    rep.witness = worst;
    rep.note = "sup F/x^2 stays above 1 - cos(2 pi / M) down to delta = 1e-6";
    return rep;
}

ConditionReport check_growth_bound(const PotentialSpec& p, const ConditionCheckParams& params) {
    ConditionReport rep;
    rep.id = ConditionId::growth_bound;
    const int m = p.period();
    const double half_lambda_max = 0.5 * lambda_max_closed_form(m);

    GrowthConstants c;
    if (params.growth_candidate) {
        c = *params.growth_candidate;
        if (!(c.growth > half_lambda_max)) {
            throw std::invalid_argument(
                "growth_bound: growth coefficient must exceed half the top Laplacian eigenvalue");
        }
        if (!(c.radius > 0.0) || !(c.offset > 0.0)) {
            throw std::invalid_argument("growth_bound: radius and offset must be positive");
        }
    } else {
        // Fit the asymptotic slope from the outer half of the scan range, then
        // take the offset as the worst shortfall over the whole range.
        c.radius = 3.0;
        double slope = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= m; ++n) {
            for (double x : linspace(params.growth_x_max / 2.0, params.growth_x_max, 512)) {
                slope = std::min(slope, p.eval(n, x) / (x * x));
                slope = std::min(slope, p.eval(n, -x) / (x * x));
            }
        }
        c.growth = 0.98 * slope;
        if (!(c.growth > half_lambda_max)) {
            rep.holds_on_sample = false;
            rep.growth_constants = c;
            rep.note = "fitted growth slope does not clear half the top Laplacian eigenvalue";
            return rep;
        }
        double offset = 0.0;
        for (int n = 1; n <= m; ++n) {
            for (double ax : linspace(c.radius, params.growth_x_max, params.growth_samples)) {
                for (double x : {ax, -ax}) {
                    offset = std::max(offset, c.growth * x * x - p.eval(n, x));
                }
            }
        }
        c.offset = offset + 1e-9;
    }

    for (int n = 1; n <= m; ++n) {
        for (double ax : linspace(c.radius, params.growth_x_max, params.growth_samples)) {
            for (double x : {ax, -ax}) {
                const double f = p.eval(n, x);
                const double bound = c.growth * x * x - c.offset;
                if (f < bound - 1e-12) {
                    rep.holds_on_sample = false;
                    rep.witness = ConditionWitness{n, x, f, bound};
                    rep.growth_constants = c;
                    rep.note = "F(n,x) < growth x^2 - offset at witness";
                    return rep;
                }
            }
        }
    }
    rep.holds_on_sample = true;
    rep.growth_constants = c;
    return rep;
}

}  // namespace

ConditionReport check_condition(const PotentialSpec& p, ConditionId id,
                                const ConditionCheckParams& params) {
    if (params.x_samples < 2) throw std::invalid_argument("check_condition: empty sample grid");
    switch (id) {
        case ConditionId::smooth_nonneg_periodic:
        case ConditionId::nonneg_periodic:
            return check_nonneg_periodic(p, id, params);
        case ConditionId::zero_at_origin:
            return check_zero_at_origin(p);
        case ConditionId::near_origin_bound:
            return check_near_origin_bound(p, params);
        case ConditionId::growth_bound:
            return check_growth_bound(p, params);
    }
    throw std::logic_error("check_condition: unknown id");
}

}  // namespace dmp
