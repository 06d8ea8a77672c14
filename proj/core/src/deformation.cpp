#include "dmp/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dmp {

namespace {

FlowTrace run_flow(const OdeRhs& rhs, const std::vector<OdeEvent>& events,
                   const std::function<double(const Eigen::VectorXd&)>& phi_of,
                   const std::function<double(const Eigen::VectorXd&)>& psi_of,
                   const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& grad_of,
                   const Eigen::VectorXd& v, double duration, double tol, double max_step) {
    OdeOptions opt;
    opt.abs_tol = tol;
    opt.max_step = max_step;

    const OdeResult res = integrate(rhs, v, 0.0, duration, opt, events);

    FlowTrace trace;
    trace.start = v;
    trace.status = res.status;
    trace.message = res.message;
    trace.max_err_est = res.max_err_est;
    trace.t.reserve(res.steps.size());
    for (const auto& rec : res.steps) {
        trace.t.push_back(rec.t);
        trace.state.push_back(rec.y);
        trace.phi.push_back(phi_of(rec.y));
        trace.psi.push_back(psi_of(rec.y));
        trace.dphi_dt.push_back(grad_of(rec.y).dot(rhs(rec.y)));
    }
    return trace;
}

}  // namespace

FlowTrace flow(const ToyLandscape& land, const BandSpec& band, const Eigen::VectorXd& v,
               double duration, double tol) {
    if (duration < 0.0) throw std::invalid_argument("flow: duration must be nonnegative");
    auto rhs = [&](const Eigen::VectorXd& y) { return vector_field_eval(land, band, y); };
    std::vector<OdeEvent> events;
    for (double level : band.event_levels()) {
        events.push_back([&land, level](const Eigen::VectorXd& y) { return land.value(y) - level; });
    }
    auto phi_of = [&](const Eigen::VectorXd& y) { return land.value(y); };
    auto psi_of = [&](const Eigen::VectorXd& y) { return psi_eval(land, band, y); };
    auto grad_of = [&](const Eigen::VectorXd& y) { return land.gradient(y); };
    return run_flow(rhs, events, phi_of, psi_of, grad_of, v, duration, tol, band.eps() / 10.0);
}

DeformationVerdict verify_band_deformation(const ToyLandscape& land, const BandSpec& band,
                                           int samples_per_set, std::uint64_t seed, double tol) {
    DeformationVerdict verdict;
    verdict.h = band.h();
    verdict.eps = band.eps();
    verdict.d_kind = to_string(band.d_spec().kind);

    Rng hyp_rng = Rng::stream(seed, 0);
    verdict.hypothesis = check_gradient_hypothesis(land, band, 256, hyp_rng);

    const double duration = 2.0 * band.eps();
    const double e = band.eps();
    const double h = band.h();

    // Fixed points: starts outside the band on both sides, far field, and D.
    verdict.fixed_points.name = "fixed_points";
    {
        Rng rng = Rng::stream(seed, 1);
        std::vector<double> levels;
        for (int i = 0; i < samples_per_set; ++i) {
            const double off = rng.uniform(0.0, 2.0 * e);
            levels.push_back(band.band_lo() - 1e-6 - off);
            levels.push_back(band.band_hi() + 1e-6 + off);
            levels.push_back(h + 10.0 * e + off);
        }
        if (band.has_d()) {
            for (int i = 0; i < samples_per_set; ++i) {
                levels.push_back(rng.uniform(band.d_lo(), band.d_hi()));
            }
        }
        bool all = true;
        for (double level : levels) {
            const Eigen::VectorXd v = point_at_level(land, level, rng);
            const FlowTrace tr = flow(land, band, v, duration, tol);
            SampleVerdict s;
            s.start = v;
            s.phi_initial = land.value(v);
            s.phi_final = tr.final_phi();
            s.pass = (tr.final_state() - v).norm() <= 1e-12 * (1.0 + v.norm());
            all = all && s.pass;
            verdict.fixed_points.samples.push_back(std::move(s));
        }
        verdict.fixed_points.pass = all;
    }

    // Inclusions: flow the lower band up / the upper band down and check the
    // claimed landing intervals.
    auto run_inclusion = [&](const char* name, double lo, double hi, double target_lo,
                             double target_hi, std::uint64_t stream) {
        ConclusionVerdict cv;
        cv.name = name;
        Rng rng = Rng::stream(seed, stream);
        bool all = true;
        for (int i = 0; i < samples_per_set; ++i) {
            const double level = rng.uniform(lo, hi);
            const Eigen::VectorXd v = point_at_level(land, level, rng);
            const FlowTrace tr = flow(land, band, v, duration, tol);
            SampleVerdict s;
            s.start = v;
            s.phi_initial = land.value(v);
            s.phi_final = tr.final_phi();
            s.pass = s.phi_final >= target_lo - 10.0 * tol && s.phi_final <= target_hi + 10.0 * tol;
            all = all && s.pass;
            cv.samples.push_back(std::move(s));
        }
        cv.pass = all;
        return cv;
    };

    verdict.upward_inclusion =
        run_inclusion("upward_inclusion", band.b_lo(), band.b_hi(), h + e, h + 1.5 * e, 2);
    verdict.downward_inclusion =
        run_inclusion("downward_inclusion", band.c_lo(), band.c_hi(), h - 1.5 * e, h - e, 3);
    return verdict;
}

FlowTrace descent_flow(const ToyLandscape& land, double c, double eps, const Eigen::VectorXd& v,
                       double tol) {
    if (!(eps > 0.0)) throw std::invalid_argument("descent_flow: eps must be positive");
    auto cutoff = [c, eps](double phi) {
        if (phi <= c - 2.0 * eps || phi >= c + 2.0 * eps) return 0.0;
        if (phi < c - eps) return (phi - (c - 2.0 * eps)) / eps;
        if (phi > c + eps) return ((c + 2.0 * eps) - phi) / eps;
        return 1.0;
    };
    auto rhs = [&land, cutoff](const Eigen::VectorXd& y) -> Eigen::VectorXd {
        const double chi = cutoff(land.value(y));
        if (chi == 0.0) return Eigen::VectorXd::Zero(y.size());
        const Eigen::VectorXd g = land.gradient(y);
        const double g2 = g.squaredNorm();
        if (g2 == 0.0) return Eigen::VectorXd::Zero(y.size());
        return (-chi / g2) * g;
    };
    std::vector<OdeEvent> events;
    for (double level : {c - 2.0 * eps, c - eps, c + eps, c + 2.0 * eps}) {
        events.push_back([&land, level](const Eigen::VectorXd& y) { return land.value(y) - level; });
    }
    auto phi_of = [&](const Eigen::VectorXd& y) { return land.value(y); };
    auto dphi_of = [&](const Eigen::VectorXd& y) { return land.gradient(y).dot(rhs(y)); };
    auto grad_of = [&](const Eigen::VectorXd& y) { return land.gradient(y); };
    return run_flow(rhs, events, phi_of, dphi_of, grad_of, v, 2.0 * eps, tol, eps / 10.0);
}

BandCloud sample_band_cloud(const Objective& f, double lo, double hi, int count, double radius,
                            std::uint64_t seed) {
    if (!(hi > lo)) throw std::invalid_argument("sample_band_cloud: empty band");
    BandCloud cloud;
    cloud.lo = lo;
    cloud.hi = hi;
    const int m = f.period();
    const double mid = 0.5 * (lo + hi);
    Rng rng(seed);
    for (int attempt = 0; attempt < count; ++attempt) {
        PeriodicSequence dir = PeriodicSequence::zeros(m);
        double len = 0.0;
        while (len < 1e-12) {
            for (int s = 1; s <= m; ++s) dir.set(s, rng.gaussian());
            len = norm(dir);
        }
        dir *= 1.0 / len;
        // Bracket a crossing of the mid level along the ray, then bisect.
        const int scan = 256;
        double prev_t = 0.0;
        double prev_v = f.value(PeriodicSequence::zeros(m)) - mid;
        for (int i = 1; i <= scan; ++i) {
            const double t = radius * i / scan;
            const double v = f.value(t * dir) - mid;
            if (prev_v != 0.0 && v != 0.0 && (prev_v < 0.0) != (v < 0.0)) {
                double a = prev_t, b = t, va = prev_v;
                for (int it = 0; it < 100; ++it) {
                    const double c2 = 0.5 * (a + b);
                    const double vc = f.value(c2 * dir) - mid;
                    if ((vc < 0.0) == (va < 0.0)) {
                        a = c2;
                        va = vc;
                    } else {
                        b = c2;
                    }
                }
                const PeriodicSequence point = 0.5 * (a + b) * dir;
                const double phi = f.value(point);
                if (phi >= lo && phi <= hi) cloud.points.push_back(point);
                break;
            }
            prev_t = t;
            prev_v = v;
        }
    }
    return cloud;
}

double cloud_distance(const BandCloud& cloud, const PeriodicSequence& u) {
    if (cloud.points.empty()) throw std::invalid_argument("cloud_distance: empty cloud");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : cloud.points) best = std::min(best, distance(u, p));
    return best;
}

DescentVerdict verify_descent_deformation(const ToyLandscape& land, double c, double eps,
                                          int samples, std::uint64_t seed, double tol) {
    DescentVerdict verdict;
    verdict.c = c;
    verdict.eps = eps;
    Rng rng = Rng::stream(seed, 17);
    bool all = true;
    for (int i = 0; i < samples; ++i) {
        // Starts across the sublevel phi <= c + eps, including below the band.
        const double level = rng.uniform(c - 3.0 * eps, c + eps);
        const Eigen::VectorXd v = point_at_level(land, level, rng);
        const FlowTrace tr = descent_flow(land, c, eps, v, tol);
        SampleVerdict s;
        s.start = v;
        s.phi_initial = land.value(v);
        s.phi_final = tr.final_phi();
        s.pass = s.phi_final <= c - eps + 1e-6;
        all = all && s.pass;
        verdict.samples.push_back(std::move(s));
    }
    verdict.pass = all;
    return verdict;
}

}  // namespace dmp
