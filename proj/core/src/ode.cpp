#include "dmp/ode.hpp"

#include <algorithm>
#include <cmath>

namespace dmp {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct TrialStep {
    Eigen::VectorXd y;
    double err = 0.0;
};

TrialStep dopri_step(const OdeRhs& rhs, const Eigen::VectorXd& y, const Eigen::VectorXd& k1,
                     double h) {
    const Eigen::VectorXd k2 = rhs(y + h * (a21 * k1));
    const Eigen::VectorXd k3 = rhs(y + h * (a31 * k1 + a32 * k2));
    const Eigen::VectorXd k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::VectorXd k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::VectorXd k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    TrialStep out;
    out.y = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Eigen::VectorXd k7 = rhs(out.y);
    const Eigen::VectorXd err_vec =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    out.err = err_vec.norm();
    return out;
}

}  // namespace

OdeResult integrate(const OdeRhs& rhs, const Eigen::VectorXd& y0, double t0, double t1,
                    const OdeOptions& options, std::span<const OdeEvent> events) {
    OdeResult res;
    res.steps.push_back({t0, y0, 0.0});
    res.y_end = y0;
    res.t_end = t0;
    if (t1 <= t0) return res;

    double t = t0;
    Eigen::VectorXd y = y0;
    double h = std::min(options.max_step, t1 - t0);

    std::vector<double> ev(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) ev[i] = events[i](y);

    for (int step = 0; step < options.max_steps; ++step) {
        if (t >= t1 - 1e-15 * (1.0 + std::abs(t1))) break;
        h = std::min(h, t1 - t);

        Eigen::VectorXd k1 = rhs(y);
        TrialStep trial = dopri_step(rhs, y, k1, h);
        if (trial.err > options.abs_tol && h > options.min_step) {
            // Shrink with the usual fifth-order heuristic.
            const double factor =
                std::clamp(0.9 * std::pow(options.abs_tol / (trial.err + 1e-300), 0.2), 0.1, 0.9);
            h = std::max(h * factor, options.min_step);
            if (h <= options.min_step) {
                res.status = OdeStatus::step_underflow;
                res.message = "step size underflow at t = " + std::to_string(t);
                break;
            }
            continue;
        }

        // Event localization: bisect the step length until the first crossing
        // is resolved to the time tolerance.
        bool crossed = false;
        for (std::size_t i = 0; i < events.size(); ++i) {
            const double after = events[i](trial.y);
            if (ev[i] != 0.0 && after != 0.0 && ((ev[i] < 0.0) != (after < 0.0))) {
                crossed = true;
                break;
            }
        }
        if (crossed && h > 16.0 * options.min_step) {
            double lo = 0.0, hi = h;
            TrialStep at_hi = trial;
            for (int it = 0; it < 60 && (hi - lo) > 1e-3 * h; ++it) {
                const double mid = 0.5 * (lo + hi);
                TrialStep at_mid = dopri_step(rhs, y, k1, mid);
                bool mid_crossed = false;
                for (std::size_t i = 0; i < events.size(); ++i) {
                    const double after = events[i](at_mid.y);
                    if (ev[i] != 0.0 && after != 0.0 && ((ev[i] < 0.0) != (after < 0.0))) {
                        mid_crossed = true;
                        break;
                    }
                }
                if (mid_crossed) {
                    hi = mid;
                    at_hi = at_mid;
                } else {
                    lo = mid;
                }
            }
            trial = at_hi;
            h = hi;
        }

        t += h;
        y = trial.y;
        res.steps.push_back({t, y, trial.err});
        res.max_err_est = std::max(res.max_err_est, trial.err);
        for (std::size_t i = 0; i < events.size(); ++i) ev[i] = events[i](y);

        // Grow the step when the error budget allows it.
        const double grow =
            trial.err > 0.0
                ? std::clamp(0.9 * std::pow(options.abs_tol / trial.err, 0.2), 1.0, 3.0)
                : 3.0;
        h = std::min(h * grow, options.max_step);

        if (step + 1 == options.max_steps) {
            res.status = OdeStatus::max_steps_exceeded;
            res.message = "maximum step count reached";
        }
    }

    res.t_end = t;
    res.y_end = y;
    return res;
}

}  // namespace dmp
