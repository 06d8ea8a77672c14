#pragma once

/**
 * @file path.hpp
 * @brief Discretized paths pinned at (0, e1, e) and the string relaxation step.
 *
 * A path holds N+1 knots (N even). Knots 0, N/2, N are pinned to the zero
 * sequence, e1, and e respectively and never move; every relaxation step
 * preserves them bitwise. After the descent sweep the knots are resampled to
 * uniform arclength per half so the spacing invariant holds.
 */

#include <utility>
#include <vector>

#include "dmp/functional.hpp"
#include "dmp/sequence.hpp"

namespace dmp {

struct DiscretePath {
    std::vector<PeriodicSequence> knots;  // size N+1

    int segments() const { return static_cast<int>(knots.size()) - 1; }
    int half() const { return segments() / 2; }
};

/// Piecewise-linear seed: 0 -> e1 on [0, N/2], e1 -> e on [N/2, N].
/// Requires N even, N >= 8, and a nondegenerate geometry (e1 != e).
DiscretePath init_path(const MountainGeometry& geometry, int n_segments);

/// Knot index and value of the maximal objective along the path; ties break
/// toward the lowest index.
std::pair<int, double> path_max(const DiscretePath& path, const Objective& f);

/// Uniform-arclength resampling per half, pinned knots untouched.
void reparametrize(DiscretePath& path);

/// Resample to twice as many segments (refinement pass).
DiscretePath refine_double(const DiscretePath& path);

struct RelaxOptions {
    double initial_step = 0.1;
    double shrink = 0.5;
    double grow = 1.5;
    int max_backtracks = 40;
    double armijo = 1e-4;
    double max_move_fraction = 0.5;  // cap knot move at this fraction of mean spacing
};

struct RelaxResult {
    bool stalled = false;          // no knot produced a descent step
    double max_before = 0.0;
    double max_after = 0.0;
    double max_displacement = 0.0; // largest knot move including resampling
};

/// One string step: simultaneous backtracking descent on all unpinned knots,
/// then reparametrization. `knot_steps` carries per-knot step memory and must
/// have size knots.size() (values <= 0 reset to initial_step).
RelaxResult relax_step(DiscretePath& path, const Objective& f, const RelaxOptions& options,
                       std::vector<double>& knot_steps);

}  // namespace dmp
