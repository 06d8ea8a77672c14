#include "dmp/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmp {

DiscretePath init_path(const MountainGeometry& geometry, int n_segments) {
    if (n_segments < 8 || n_segments % 2 != 0) {
        throw std::invalid_argument("init_path: segment count must be even and >= 8");
    }
    if (distance(geometry.e, geometry.e1) <= 1e-14) {
        throw std::invalid_argument("init_path: degenerate geometry, e == e1");
    }
    const int m = geometry.e.period();
    const int half = n_segments / 2;
    DiscretePath path;
    path.knots.reserve(static_cast<std::size_t>(n_segments + 1));
    const PeriodicSequence zero = PeriodicSequence::zeros(m);
    for (int k = 0; k <= half; ++k) {
        const double t = static_cast<double>(k) / half;
        path.knots.push_back((1.0 - t) * zero + t * geometry.e1);
    }
    for (int k = 1; k <= half; ++k) {
        const double t = static_cast<double>(k) / half;
        path.knots.push_back((1.0 - t) * geometry.e1 + t * geometry.e);
    }
    return path;
}

std::pair<int, double> path_max(const DiscretePath& path, const Objective& f) {
    int best = 0;
    double best_value = f.value(path.knots[0]);
    for (int k = 1; k <= path.segments(); ++k) {
        const double v = f.value(path.knots[static_cast<std::size_t>(k)]);
        if (v > best_value) {
            best = k;
            best_value = v;
        }
    }
    return {best, best_value};
}

namespace {

/// Resample knots[lo..hi] (pinned ends) to uniform arclength.
void resample_segment(const std::vector<PeriodicSequence>& knots, int lo, int hi,
                      std::vector<PeriodicSequence>& out, int out_lo, int out_count) {
    std::vector<double> cumulative(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (int k = lo + 1; k <= hi; ++k) {
        cumulative[static_cast<std::size_t>(k - lo)] =
            cumulative[static_cast<std::size_t>(k - lo - 1)] +
            distance(knots[static_cast<std::size_t>(k)], knots[static_cast<std::size_t>(k - 1)]);
    }
    const double total = cumulative.back();
    if (total <= 1e-300) {
        for (int j = 0; j < out_count; ++j) out[static_cast<std::size_t>(out_lo + j)] = knots[static_cast<std::size_t>(lo)];
        return;
    }
    int seg = 0;
    for (int j = 1; j < out_count - 1; ++j) {
        const double target = total * j / (out_count - 1);
        while (seg + 1 < hi - lo && cumulative[static_cast<std::size_t>(seg + 1)] < target) ++seg;
        const double s0 = cumulative[static_cast<std::size_t>(seg)];
        const double s1 = cumulative[static_cast<std::size_t>(seg + 1)];
        const double w = s1 > s0 ? (target - s0) / (s1 - s0) : 0.0;
        out[static_cast<std::size_t>(out_lo + j)] =
            (1.0 - w) * knots[static_cast<std::size_t>(lo + seg)] +
            w * knots[static_cast<std::size_t>(lo + seg + 1)];
    }
    out[static_cast<std::size_t>(out_lo)] = knots[static_cast<std::size_t>(lo)];
    out[static_cast<std::size_t>(out_lo + out_count - 1)] = knots[static_cast<std::size_t>(hi)];
}

}  // namespace

void reparametrize(DiscretePath& path) {
    const int n = path.segments();
    const int half = n / 2;
    std::vector<PeriodicSequence> out = path.knots;
    resample_segment(path.knots, 0, half, out, 0, half + 1);
    resample_segment(path.knots, half, n, out, half, half + 1);
    path.knots = std::move(out);
}

DiscretePath refine_double(const DiscretePath& path) {
    const int n = path.segments();
    const int half = n / 2;
    DiscretePath fine;
    fine.knots.assign(static_cast<std::size_t>(2 * n + 1), path.knots[0]);
    resample_segment(path.knots, 0, half, fine.knots, 0, n + 1);
    resample_segment(path.knots, half, n, fine.knots, n, n + 1);
    return fine;
}

RelaxResult relax_step(DiscretePath& path, const Objective& f, const RelaxOptions& options,
                       std::vector<double>& knot_steps) {
    const int n = path.segments();
    const int half = n / 2;
    if (knot_steps.size() != path.knots.size()) {
        knot_steps.assign(path.knots.size(), options.initial_step);
    }

    RelaxResult result;
    result.max_before = path_max(path, f).second;

    double total_length = 0.0;
    for (int k = 1; k <= n; ++k) {
        total_length += distance(path.knots[static_cast<std::size_t>(k)],
                                 path.knots[static_cast<std::size_t>(k - 1)]);
    }
    const double mean_spacing = total_length / n;
    const double move_cap = options.max_move_fraction * mean_spacing;

    // Gradients at the pre-move snapshot, so the sweep is order-independent.
    std::vector<PeriodicSequence> grads;
    grads.reserve(path.knots.size());
    for (const auto& knot : path.knots) grads.push_back(f.gradient(knot));

    const std::vector<PeriodicSequence> before = path.knots;
    bool any_accepted = false;
    for (int k = 1; k < n; ++k) {
        if (k == half) continue;  // pinned
        const PeriodicSequence& u = before[static_cast<std::size_t>(k)];
        const PeriodicSequence& g = grads[static_cast<std::size_t>(k)];
        const double gnorm = norm(g);
        if (gnorm < 1e-15) continue;
        double h = knot_steps[static_cast<std::size_t>(k)];
        if (h <= 0.0) h = options.initial_step;
        h = std::min(h, move_cap / gnorm);
        const double phi0 = f.value(u);
        bool accepted = false;
        for (int bt = 0; bt < options.max_backtracks && h * gnorm > 1e-16; ++bt) {
            const PeriodicSequence trial = u - h * g;
            if (f.value(trial) <= phi0 - options.armijo * h * gnorm * gnorm) {
                path.knots[static_cast<std::size_t>(k)] = trial;
                knot_steps[static_cast<std::size_t>(k)] = h * options.grow;
                accepted = true;
                break;
            }
            h *= options.shrink;
        }
        if (!accepted) knot_steps[static_cast<std::size_t>(k)] = options.initial_step;
        any_accepted = any_accepted || accepted;
    }

    reparametrize(path);

    result.stalled = !any_accepted;
    result.max_after = path_max(path, f).second;
    for (std::size_t k = 0; k < path.knots.size(); ++k) {
        result.max_displacement =
            std::max(result.max_displacement, distance(path.knots[k], before[k]));
    }
    return result;
}

}  // namespace dmp
