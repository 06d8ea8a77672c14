#include "dmp/functional.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dmp/rng.hpp"
#include "dmp/spectrum.hpp"

namespace dmp {

FunctionalSpec FunctionalSpec::action(PotentialSpec potential) {
    FunctionalSpec f(std::move(potential));
    f.kind_ = Kind::action;
    return f;
}

FunctionalSpec FunctionalSpec::single_site(PotentialSpec potential, int distinguished_index,
                                           double growth) {
    const int m = potential.period();
    if (distinguished_index < 1 || distinguished_index > m) {
        throw std::invalid_argument("FunctionalSpec: distinguished index out of range");
    }
    if (!(growth > 0.5 * lambda_max_closed_form(m))) {
        throw std::invalid_argument(
            "FunctionalSpec: growth must exceed half the top Laplacian eigenvalue");
    }
    FunctionalSpec f(std::move(potential));
    f.kind_ = Kind::single_site;
    f.distinguished_index_ = distinguished_index;
    f.growth_ = growth;
    return f;
}

double FunctionalSpec::value(const PeriodicSequence& u) const {
    if (u.period() != period()) throw std::invalid_argument("FunctionalSpec: period mismatch");
    const int m = period();
    double kinetic = 0.0;
    for (int s = 1; s <= m; ++s) {
        const double d = u.at(s + 1) - u.at(s);
        kinetic += d * d;
    }
    kinetic *= 0.5;
    if (kind_ == Kind::action) {
        double pot = 0.0;
        for (int s = 1; s <= m; ++s) pot += potential_.eval(s, u.at(s));
        return kinetic - pot;
    }
    double well = 0.0;
    for (int s = 1; s <= m; ++s) {
        if (s != distinguished_index_) well += u.at(s) * u.at(s);
    }
    return kinetic - potential_.eval(distinguished_index_, u.at(distinguished_index_)) - well;
}

PeriodicSequence FunctionalSpec::gradient(const PeriodicSequence& u) const {
    if (u.period() != period()) throw std::invalid_argument("FunctionalSpec: period mismatch");
    const int m = period();
    PeriodicSequence g = PeriodicSequence::zeros(m);
    for (int s = 1; s <= m; ++s) {
        const double lap = 2.0 * u.at(s) - u.at(s - 1) - u.at(s + 1);  // = -Delta^2 u_{s-1}
        if (kind_ == Kind::action) {
            g.set(s, lap - potential_.grad(s, u.at(s)));
        } else if (s == distinguished_index_) {
            g.set(s, lap - potential_.grad(s, u.at(s)));
        } else {
            g.set(s, lap - 2.0 * u.at(s));
        }
    }
    return g;
}

// ---------------------------------------------------------------------------

MountainGeometry build_spike_geometry(const FunctionalSpec& f, double scale) {
    if (f.kind() != FunctionalSpec::Kind::single_site) {
        throw std::invalid_argument("build_spike_geometry: needs a single_site functional");
    }
    const int m = f.period();
    if (m < 6) throw std::invalid_argument("build_spike_geometry: period must be >= 6");
    if (!(scale > 0.0)) throw std::invalid_argument("build_spike_geometry: scale must be positive");

    const int n = f.distinguished_index();
    const double v = std::sqrt(f.growth()) * scale;

    PeriodicSequence e1 = PeriodicSequence::zeros(m);
    e1.set(n + 1, v);
    e1.set(n + 2, -v);
    PeriodicSequence e = e1;
    e.set(n - 1, v);

    const double level = f.growth() * scale * scale;
    const double phi0 = f.value(PeriodicSequence::zeros(m));
    if (std::abs(f.value(e) - level) > 1e-10 || std::abs(f.value(e1) - level) > 1e-10 ||
        std::abs(phi0) > 1e-10) {
        throw std::runtime_error(
            "build_spike_geometry: pinned-level identity failed; potential must vanish at x = 0");
    }

    MountainGeometry g;
    g.e = e;
    g.e1 = e1;
    g.level = level;
    g.scale = scale;
    g.r = std::sqrt(norm(e1) * norm(e));
    return g;
}

MountainGeometry find_ray_geometry(const FunctionalSpec& f, const PeriodicSequence& direction,
                                   double level, double t_max, int scan_points) {
    if (direction.period() != f.period()) {
        throw std::invalid_argument("find_ray_geometry: direction period mismatch");
    }
    if (!(norm(direction) > 0.0)) {
        throw std::invalid_argument("find_ray_geometry: direction must be nonzero");
    }
    if (scan_points < 8) throw std::invalid_argument("find_ray_geometry: scan too coarse");

    auto profile = [&](double t) { return f.value(t * direction); };

    // Scan for the rising crossing, the crest, and the falling crossing.
    double prev_t = 0.0;
    double prev_p = profile(0.0);
    double t_up_lo = -1.0, t_up_hi = -1.0, t_dn_lo = -1.0, t_dn_hi = -1.0;
    bool above = prev_p > level;
    for (int i = 1; i <= scan_points; ++i) {
        const double t = t_max * i / scan_points;
        const double p = profile(t);
        if (!above && p > level && t_up_lo < 0.0) {
            t_up_lo = prev_t;
            t_up_hi = t;
            above = true;
        } else if (above && p < level && t_up_lo >= 0.0) {
            t_dn_lo = prev_t;
            t_dn_hi = t;
            break;
        }
        prev_t = t;
        prev_p = p;
    }
    if (t_up_lo < 0.0) {
        throw std::runtime_error("find_ray_geometry: no mountain on this ray (profile stays below level)");
    }
    if (t_dn_lo < 0.0) {
        throw std::runtime_error("find_ray_geometry: bisection bracket not found for the falling crossing");
    }

    auto bisect = [&](double lo, double hi, bool rising) {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double p = profile(mid);
            if (std::abs(p - level) <= 1e-12) return mid;
            const bool below = p < level;
            if (rising == below) lo = mid; else hi = mid;
            if (hi - lo < 1e-15 * (1.0 + hi)) break;
        }
        return 0.5 * (lo + hi);
    };

    const double t1 = bisect(t_up_lo, t_up_hi, true);
    const double t2 = bisect(t_dn_lo, t_dn_hi, false);

    MountainGeometry g;
    g.e1 = t1 * direction;
    g.e = t2 * direction;
    g.level = level;
    g.scale = 0.0;
    if (std::abs(f.value(g.e1) - level) > 1e-10 || std::abs(f.value(g.e) - level) > 1e-10) {
        throw std::runtime_error("find_ray_geometry: crossings did not converge to the level");
    }
    g.r = std::sqrt(norm(g.e1) * norm(g.e));
    return g;
}

// ---------------------------------------------------------------------------

PsConstants derive_ps_constants(const PotentialSpec& p, const GrowthConstants& growth,
                                int scan_points) {
    if (scan_points < 3) throw std::invalid_argument("derive_ps_constants: scan too coarse");
    PsConstants c;
    c.growth = growth;
    double w = 0.0;
    for (int n = 1; n <= p.period(); ++n) {
        for (int i = 0; i < scan_points; ++i) {
            const double x = -growth.radius + 2.0 * growth.radius * i / (scan_points - 1);
            w = std::max(w, std::abs(p.eval(n, x) - growth.growth * x * x + growth.offset));
        }
    }
    c.w = w;
    c.wprime = w + growth.offset;
    return c;
}

namespace {

double bound_coefficient(const FunctionalSpec& f, const PsConstants& c) {
    return 0.5 * lambda_max_closed_form(f.period()) - c.growth.growth;
}

double bound_constant(const FunctionalSpec& f, const PsConstants& c) {
    return f.kind() == FunctionalSpec::Kind::action ? f.period() * c.wprime : c.wprime;
}

}  // namespace

SweepReport coercivity_check(const FunctionalSpec& f, const PsConstants& c,
                             std::span<const PeriodicSequence> samples) {
    if (!(c.growth.growth > 0.5 * lambda_max_closed_form(f.period()))) {
        throw std::invalid_argument("coercivity_check: bound vacuous, growth <= lambda_max / 2");
    }
    SweepReport rep;
    rep.note = "bound: (lambda_max/2 - growth)|u|^2 + constant, constant = " +
               std::to_string(bound_constant(f, c));
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const double coeff = bound_coefficient(f, c);
    const double cst = bound_constant(f, c);
    for (const auto& u : samples) {
        const double phi = f.value(u);
        const double bound = coeff * inner_product(u, u) + cst;
        const double margin = bound - phi;
        rep.samples += 1;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -1e-12 * (1.0 + std::abs(bound))) {
            rep.violations += 1;
        } else {
            rep.max_slack = std::max(rep.max_slack, margin);
        }
    }
    return rep;
}

SweepReport palais_smale_check(const FunctionalSpec& f, const PsConstants& c, double m1,
                               std::span<const PeriodicSequence> samples) {
    SweepReport rep;
    rep.note = "norm bound uses wprime = w + offset";
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const double gap = c.growth.growth - 0.5 * lambda_max_closed_form(f.period());
    if (!(gap > 0.0)) throw std::invalid_argument("palais_smale_check: bound vacuous");
    const double norm_bound = (bound_constant(f, c) + m1) / gap;
    for (const auto& u : samples) {
        rep.samples += 1;
        if (f.value(u) < -m1) continue;  // exempt from the implication
        const double margin = norm_bound - inner_product(u, u);
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -1e-12 * (1.0 + norm_bound)) {
            rep.violations += 1;
        } else {
            rep.max_slack = std::max(rep.max_slack, margin);
        }
    }
    if (rep.worst_margin == std::numeric_limits<double>::infinity()) rep.worst_margin = 0.0;
    return rep;
}

// ---------------------------------------------------------------------------

double estimate_sphere_infimum(const Objective& f, double r, int restarts, std::uint64_t seed) {
    if (!(r > 0.0)) throw std::invalid_argument("estimate_sphere_infimum: r must be positive");
    if (restarts < 1) throw std::invalid_argument("estimate_sphere_infimum: restarts must be >= 1");
    const int m = f.period();
    double best = std::numeric_limits<double>::infinity();

    for (int k = 0; k < restarts; ++k) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(k));
        PeriodicSequence u = PeriodicSequence::zeros(m);
        double len = 0.0;
        while (len < 1e-12) {
            for (int s = 1; s <= m; ++s) u.set(s, rng.gaussian());
            len = norm(u);
        }
        u *= r / len;
        best = std::min(best, f.value(u));

        double step = 0.25 * r;
        for (int it = 0; it < 400; ++it) {
            const PeriodicSequence g = f.gradient(u);
            // Tangential component of the gradient on the sphere.
            PeriodicSequence gt = g;
            const double radial = inner_product(g, u) / (r * r);
            gt -= radial * u;
            const double gt_norm = norm(gt);
            if (gt_norm < 1e-12) break;
            const double phi = f.value(u);
            bool accepted = false;
            double h = step;
            for (int bt = 0; bt < 40; ++bt) {
                PeriodicSequence trial = u - (h / gt_norm) * gt;
                trial *= r / norm(trial);
                if (f.value(trial) < phi) {
                    u = trial;
                    step = std::min(1.5 * h, 0.5 * r);
                    accepted = true;
                    break;
                }
                h *= 0.5;
            }
            if (!accepted) break;
            best = std::min(best, f.value(u));
        }
    }
    return best;
}

}  // namespace dmp
