#include "dmp/band.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dmp {

DSpec DSpec::mid_slab(double margin_lo, double margin_hi) {
    if (margin_lo < 0.0 || margin_hi < 0.0) {
        throw std::invalid_argument("DSpec: slab margins must be nonnegative");
    }
    DSpec d;
    d.kind = Kind::mid_slab;
    d.margin_lo = margin_lo;
    d.margin_hi = margin_hi;
    return d;
}

DSpec DSpec::level_set(double level) {
    DSpec d;
    d.kind = Kind::level_set;
    d.level = level;
    return d;
}

std::string to_string(DSpec::Kind kind) {
    switch (kind) {
        case DSpec::Kind::empty: return "empty";
        case DSpec::Kind::mid_slab: return "mid_slab";
        case DSpec::Kind::level_set: return "level_set";
    }
    throw std::logic_error("DSpec: unknown kind");
}

BandSpec::BandSpec(double h, double eps, DSpec d) : h_(h), eps_(eps), d_(d) {
    if (!(eps > 0.0)) throw std::invalid_argument("BandSpec: eps must be positive");
    if (d_.kind != DSpec::Kind::empty) {
        const double third = eps_ / 3.0;
        if (d_lo() < h_ - third - 1e-15 || d_hi() > h_ + third + 1e-15) {
            throw std::invalid_argument("BandSpec: D must lie inside phi^{-1}([h - e/3, h + e/3])");
        }
        if (d_lo() > d_hi()) throw std::invalid_argument("BandSpec: empty D slab; use Kind::empty");
    }
}

double BandSpec::d_lo() const {
    switch (d_.kind) {
        case DSpec::Kind::empty: return 0.0;
        case DSpec::Kind::mid_slab: return h_ - eps_ / 3.0 + d_.margin_lo;
        case DSpec::Kind::level_set: return d_.level;
    }
    throw std::logic_error("DSpec: unknown kind");
}

double BandSpec::d_hi() const {
    switch (d_.kind) {
        case DSpec::Kind::empty: return 0.0;
        case DSpec::Kind::mid_slab: return h_ + eps_ / 3.0 - d_.margin_hi;
        case DSpec::Kind::level_set: return d_.level;
    }
    throw std::logic_error("DSpec: unknown kind");
}

bool BandSpec::in_d(double phi_value) const {
    if (!has_d()) return false;
    return phi_value >= d_lo() && phi_value <= d_hi();
}

bool BandSpec::in_a(double phi_value) const {
    return phi_value >= band_lo() && phi_value <= band_hi() && !in_d(phi_value);
}

double BandSpec::dist_to_b(const ToyLandscape& land, const Eigen::VectorXd& v) const {
    return land.dist_to_band(v, b_lo(), b_hi());
}

double BandSpec::dist_to_c(const ToyLandscape& land, const Eigen::VectorXd& v) const {
    return land.dist_to_band(v, c_lo(), c_hi());
}

double BandSpec::dist_to_d(const ToyLandscape& land, const Eigen::VectorXd& v) const {
    if (!has_d()) return std::numeric_limits<double>::infinity();
    return land.dist_to_band(v, d_lo(), d_hi());
}

double BandSpec::dist_to_complement_of_a(const ToyLandscape& land,
                                         const Eigen::VectorXd& v) const {
    // X \ A = (X \ band) union D.
    const double outside = land.dist_to_band_complement(v, band_lo(), band_hi());
    return std::min(outside, dist_to_d(land, v));
}

std::vector<double> BandSpec::event_levels() const {
    std::vector<double> levels = {band_lo(), b_lo(),   b_hi(),  h_,
                                  c_lo(),    c_hi(),   band_hi()};
    if (has_d()) {
        levels.push_back(d_lo());
        levels.push_back(d_hi());
    }
    return levels;
}

double psi_eval(const ToyLandscape& land, const BandSpec& band, const Eigen::VectorXd& v) {
    const double db = band.dist_to_b(land, v);
    const double dc = band.dist_to_c(land, v);
    const double dxa = band.dist_to_complement_of_a(land, v);
    const double numerator = (dc - db) * dxa;
    const double denominator = (dc + db) * dxa + db * dc;
    if (denominator < 1e-14) return 0.0;
    return numerator / denominator;
}

Eigen::VectorXd vector_field_eval(const ToyLandscape& land, const BandSpec& band,
                                  const Eigen::VectorXd& v) {
    const double phi = land.value(v);
    if (!band.in_a(phi)) return Eigen::VectorXd::Zero(v.size());
    const Eigen::VectorXd g = land.gradient(v);
    const double g2 = g.squaredNorm();
    if (g2 == 0.0) {
        // Hypothesis violation (stationary point inside the band); the printed
        // formula is singular here, so return zero and let callers flag it.
        return Eigen::VectorXd::Zero(v.size());
    }
    return psi_eval(land, band, v) / g2 * g;
}

HypothesisReport check_gradient_hypothesis(const ToyLandscape& land, const BandSpec& band,
                                           int samples, Rng& rng) {
    HypothesisReport rep;
    rep.checked = true;
    rep.min_gradient_norm = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double level = rng.uniform(band.band_lo(), band.band_hi());
        const Eigen::VectorXd v = point_at_level(land, level, rng);
        rep.min_gradient_norm = std::min(rep.min_gradient_norm, land.gradient(v).norm());
        rep.samples += 1;
    }
    rep.holds_on_sample = rep.min_gradient_norm >= 2.0 * band.eps();
    return rep;
}

Eigen::VectorXd point_at_level(const ToyLandscape& land, double level, Rng& rng) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(land.dimension());
    for (int i = 0; i < land.dimension(); ++i) v(i) = rng.uniform(-1.0, 1.0);
    if (land.kind() == ToyLandscape::Kind::linear) {
        v(0) = level;
        return v;
    }
    // Saddle: pick the rotated coordinate w1 away from zero, solve for w2.
    const double w1 = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
    const double w2 = level / w1;
    const double inv_sqrt2 = 0.70710678118654752440;
    v(0) = (w1 + w2) * inv_sqrt2;
    v(1) = (w1 - w2) * inv_sqrt2;
    return v;
}

}  // namespace dmp
