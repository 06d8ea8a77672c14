#include "dmp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "dmp/functional.hpp"
#include "dmp/rng.hpp"
#include "dmp/spectrum.hpp"

namespace dmp {

double residual(const PeriodicSequence& u, const PotentialSpec& p) {
    if (u.period() != p.period()) throw std::invalid_argument("residual: period mismatch");
    double worst = 0.0;
    for (int n = 1; n <= u.period(); ++n) {
        worst = std::max(worst, std::abs(second_difference(u, n) + p.grad(n, u.at(n))));
    }
    return worst;
}

namespace {

Eigen::VectorXd residual_vector(const PeriodicSequence& u, const PotentialSpec& p) {
    const int m = u.period();
    Eigen::VectorXd r(m);
    for (int n = 1; n <= m; ++n) r(n - 1) = second_difference(u, n) + p.grad(n, u.at(n));
    return r;
}

Eigen::MatrixXd residual_jacobian(const PeriodicSequence& u, const PotentialSpec& p) {
    const int m = u.period();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
    for (int n = 0; n < m; ++n) {
        j(n, (n + 1) % m) += 1.0;
        j(n, (n + m - 1) % m) += 1.0;
        j(n, n) += -2.0 + p.grad2(n + 1, u.at(n + 1));
    }
    return j;
}

PeriodicSequence from_eigen(const Eigen::VectorXd& v) {
    return PeriodicSequence(std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace

NewtonResult newton_refine(const PeriodicSequence& u0, const PotentialSpec& p, double tol,
                           int max_iter) {
    NewtonResult res;
    res.u = u0;
    res.residual = residual(u0, p);
    res.condition_estimate = 0.0;

    for (int it = 0; it < max_iter && res.residual > tol; ++it) {
        const Eigen::VectorXd r = residual_vector(res.u, p);
        const Eigen::MatrixXd j = residual_jacobian(res.u, p);

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smax = svd.singularValues()(0);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        const bool singular = smin < 1e-10 * std::max(1.0, smax);
        if (singular) res.singular_jacobian = true;
        res.condition_estimate =
            std::max(res.condition_estimate, smax / std::max(smin, 1e-300));

        // Minimum-norm least-squares step; coincides with the Newton step on
        // full-rank Jacobians.
        svd.setThreshold(1e-12);
        const Eigen::VectorXd delta = svd.solve(-r);

        double lambda = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < 48; ++bt) {
            Eigen::VectorXd trial(res.u.period());
            for (int n = 0; n < res.u.period(); ++n) {
                trial(n) = res.u.at(n + 1) + lambda * delta(n);
            }
            const PeriodicSequence trial_seq = from_eigen(trial);
            const double trial_res = residual(trial_seq, p);
            if (trial_res < res.residual) {
                res.u = trial_seq;
                res.residual = trial_res;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        res.iterations = it + 1;
        if (!accepted) break;  // diverged / stuck; report the best iterate
    }
    res.converged = res.residual <= tol;
    return res;
}

namespace {

std::vector<PeriodicSequence> orbit(const PeriodicSequence& u, bool shifts, bool sign) {
    std::vector<PeriodicSequence> reps;
    const int m = u.period();
    const int shift_count = shifts ? m : 1;
    for (int s = 0; s < shift_count; ++s) {
        PeriodicSequence v = u.shifted(s);
        reps.push_back(v);
        if (sign) reps.push_back(-1.0 * v);
    }
    return reps;
}

double orbit_distance(const PeriodicSequence& u, const PeriodicSequence& v, bool shifts,
                      bool sign) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& rep : orbit(v, shifts, sign)) best = std::min(best, distance(u, rep));
    return best;
}

SolutionClass classify(const PeriodicSequence& u, double tol) {
    double mean = 0.0;
    for (int n = 1; n <= u.period(); ++n) mean += u.at(n);
    mean /= u.period();
    double dev = 0.0, mag = 0.0;
    for (int n = 1; n <= u.period(); ++n) {
        dev = std::max(dev, std::abs(u.at(n) - mean));
        mag = std::max(mag, std::abs(u.at(n)));
    }
    if (mag <= tol) return SolutionClass::trivial_zero;
    if (dev <= tol) return SolutionClass::constant;
    return SolutionClass::nontrivial;
}

std::vector<PeriodicSequence> structured_ray_directions(int m) {
    std::vector<std::vector<double>> patterns;
    patterns.push_back(std::vector<double>(static_cast<std::size_t>(m), 1.0));  // constants
    if (m % 2 == 0) {
        std::vector<double> alt(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) alt[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1.0 : -1.0;
        patterns.push_back(alt);
    }
    if (m % 3 == 0) {
        std::vector<double> p3(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const int r = i % 3;
            p3[static_cast<std::size_t>(i)] = (r == 0) ? 1.0 : (r == 1 ? -1.0 : 0.0);
        }
        patterns.push_back(p3);
    }
    if (m % 4 == 0) {
        std::vector<double> p4(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const int r = i % 4;
            p4[static_cast<std::size_t>(i)] = (r == 0) ? 1.0 : (r == 2 ? -1.0 : 0.0);
        }
        patterns.push_back(p4);
    }
    std::vector<PeriodicSequence> out;
    const Eigen::MatrixXd lap = ring_laplacian_matrix(m);
    for (auto& pat : patterns) {
        PeriodicSequence d(pat);
        Eigen::VectorXd dv = Eigen::Map<const Eigen::VectorXd>(pat.data(), m);
        const double lambda = dv.dot(lap * dv) / dv.dot(dv);
        if ((lap * dv - lambda * dv).cwiseAbs().maxCoeff() <= 1e-10) out.push_back(d);
    }
    return out;
}

}  // namespace

std::string to_string(SolutionClass c) {
    switch (c) {
        case SolutionClass::trivial_zero: return "trivial_zero";
        case SolutionClass::constant: return "constant";
        case SolutionClass::nontrivial: return "nontrivial";
    }
    throw std::logic_error("SolutionClass: unknown");
}

SolutionCatalog multistart(const PotentialSpec& p, const MultistartOptions& options,
                           std::uint64_t seed) {
    const int m = p.period();
    SolutionCatalog cat;
    cat.fingerprint = p.fingerprint();
    cat.admission_tol = options.tol;
    cat.dedup_tol = options.dedup_tol;
    cat.shift_symmetry = p.autonomous();
    cat.sign_symmetry = p.even_in_x();

    const FunctionalSpec action = FunctionalSpec::action(p);

    std::vector<PeriodicSequence> starts;
    for (const auto& d : structured_ray_directions(m)) {
        for (double amp : {0.5, 1.0, 1.5, 2.0}) starts.push_back(amp * d);
    }
    Rng rng = Rng::stream(seed, 0);
    for (int k = 0; k < options.random_starts; ++k) {
        PeriodicSequence u = PeriodicSequence::zeros(m);
        for (int s = 1; s <= m; ++s) {
            u.set(s, rng.uniform(-options.box_halfwidth, options.box_halfwidth));
        }
        starts.push_back(std::move(u));
    }

    cat.starts_attempted = static_cast<int>(starts.size());
    for (const auto& u0 : starts) {
        const NewtonResult nr = newton_refine(u0, p, options.tol, options.newton_max_iter);
        if (!nr.converged) continue;
        cat.starts_converged += 1;
        bool duplicate = false;
        for (auto& entry : cat.entries) {
            if (orbit_distance(nr.u, entry.u, cat.shift_symmetry, cat.sign_symmetry) <=
                options.dedup_tol) {
                duplicate = true;
                if (nr.residual < entry.residual) {
                    entry.u = nr.u;
                    entry.residual = nr.residual;
                    entry.phi_action = action.value(nr.u);
                }
                break;
            }
        }
        if (duplicate) continue;
        CatalogEntry entry;
        entry.u = nr.u;
        entry.residual = nr.residual;
        entry.phi_action = action.value(nr.u);
        entry.cls = classify(nr.u, options.dedup_tol);
        cat.entries.push_back(std::move(entry));
    }

    std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a,
                                                         const CatalogEntry& b) {
        if (a.phi_action != b.phi_action) return a.phi_action < b.phi_action;
        return a.u.values() < b.u.values();
    });
    return cat;
}

CatalogMatch catalog_match(const SolutionCatalog& catalog, const PeriodicSequence& u, double tol) {
    if (catalog.entries.empty()) throw std::invalid_argument("catalog_match: empty catalog");
    CatalogMatch match;
    match.distance = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(catalog.entries.size()); ++i) {
        const double d = orbit_distance(u, catalog.entries[static_cast<std::size_t>(i)].u,
                                        catalog.shift_symmetry, catalog.sign_symmetry);
        if (d < match.distance) {
            match.distance = d;
            match.entry_index = i;
        }
    }
    match.matched = match.distance <= tol;
    return match;
}

std::vector<double> ray_critical_scan(const PotentialSpec& p, const PeriodicSequence& direction,
                                      double t_lo, double t_hi, int scan_points) {
    const int m = p.period();
    if (direction.period() != m) throw std::invalid_argument("ray_critical_scan: period mismatch");
    if (!p.autonomous()) {
        throw std::invalid_argument("ray_critical_scan: requires a constant weight");
    }
    if (!p.even_in_x()) {
        throw std::invalid_argument("ray_critical_scan: requires an x-even potential");
    }
    bool nonzero = false;
    for (int n = 1; n <= m; ++n) {
        const double v = direction.at(n);
        if (v != 0.0 && std::abs(std::abs(v) - 1.0) > 1e-12) {
            throw std::invalid_argument("ray_critical_scan: direction entries must be 0 or +-1");
        }
        nonzero = nonzero || v != 0.0;
    }
    if (!nonzero) throw std::invalid_argument("ray_critical_scan: direction must be nonzero");

    const Eigen::MatrixXd lap = ring_laplacian_matrix(m);
    Eigen::VectorXd dv(m);
    for (int n = 1; n <= m; ++n) dv(n - 1) = direction.at(n);
    const double lambda = dv.dot(lap * dv) / dv.dot(dv);
    if ((lap * dv - lambda * dv).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("ray_critical_scan: direction is not a Laplacian eigenvector");
    }

    if (!(t_hi > t_lo)) throw std::invalid_argument("ray_critical_scan: empty range");
    if (scan_points < 8) throw std::invalid_argument("ray_critical_scan: scan too coarse");

    // lambda t = dF/dx(1, t) along the ray.
    auto r = [&](double t) { return lambda * t - p.grad(1, t); };

    std::vector<double> roots;
    auto push_root = [&](double t) {
        for (double existing : roots) {
            if (std::abs(existing - t) <= 1e-9 * (1.0 + std::abs(t))) return;
        }
        roots.push_back(t);
    };
    if (t_lo <= 0.0 && t_hi >= 0.0) push_root(0.0);

    double prev_t = t_lo;
    double prev_r = r(t_lo);
    if (prev_r == 0.0) push_root(prev_t);
    for (int i = 1; i <= scan_points; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / scan_points;
        const double rt = r(t);
        if (rt == 0.0) {
            push_root(t);
        } else if (prev_r != 0.0 && (prev_r < 0.0) != (rt < 0.0)) {
            double lo = prev_t, hi = t, rlo = prev_r;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double rm = r(mid);
                if (std::abs(rm) <= 1e-13) {
                    lo = hi = mid;
                    break;
                }
                if ((rm < 0.0) == (rlo < 0.0)) {
                    lo = mid;
                    rlo = rm;
                } else {
                    hi = mid;
                }
                if (hi - lo <= 1e-15 * (1.0 + std::abs(hi))) break;
            }
            push_root(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_r = rt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace dmp
