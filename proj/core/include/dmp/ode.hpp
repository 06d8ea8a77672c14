#pragma once

/**
 * @file ode.hpp
 * @brief Adaptive explicit Runge-Kutta integration (Dormand-Prince 5(4)) with
 *        event localization.
 *
 * Events are scalar functions of the state; when one changes sign across an
 * accepted step, the step is shrunk by bisection so the trajectory lands on
 * the crossing before continuing. Distance-based vector fields are only
 * piecewise smooth, so landing on the kinks keeps the error estimate honest.
 */

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dmp {

using OdeRhs = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using OdeEvent = std::function<double(const Eigen::VectorXd&)>;

enum class OdeStatus { ok, step_underflow, max_steps_exceeded };

struct OdeOptions {
    double abs_tol = 1e-9;
    double max_step = 0.1;
    double min_step = 1e-13;
    int max_steps = 2000000;
};

struct OdeStepRecord {
    double t = 0.0;
    Eigen::VectorXd y;
    double err_est = 0.0;
};

struct OdeResult {
    OdeStatus status = OdeStatus::ok;
    double t_end = 0.0;
    Eigen::VectorXd y_end;
    std::vector<OdeStepRecord> steps;  // includes the initial state
    double max_err_est = 0.0;
    std::string message;
};

OdeResult integrate(const OdeRhs& rhs, const Eigen::VectorXd& y0, double t0, double t1,
                    const OdeOptions& options, std::span<const OdeEvent> events = {});

}  // namespace dmp
