#include "dmp/toy_landscape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dmp {

ToyLandscape ToyLandscape::linear(int dimension) {
    if (dimension < 1 || dimension > 3) {
        throw std::invalid_argument("ToyLandscape: dimension must be 1, 2, or 3");
    }
    return ToyLandscape(Kind::linear, dimension);
}

ToyLandscape ToyLandscape::saddle(int dimension) {
    if (dimension < 2 || dimension > 3) {
        throw std::invalid_argument("ToyLandscape: saddle needs dimension 2 or 3");
    }
    return ToyLandscape(Kind::saddle, dimension);
}

double ToyLandscape::value(const Eigen::VectorXd& v) const {
    if (v.size() != dimension_) throw std::invalid_argument("ToyLandscape: dimension mismatch");
    if (kind_ == Kind::linear) return v(0);
    return 0.5 * (v(0) * v(0) - v(1) * v(1));
}

Eigen::VectorXd ToyLandscape::gradient(const Eigen::VectorXd& v) const {
    if (v.size() != dimension_) throw std::invalid_argument("ToyLandscape: dimension mismatch");
    Eigen::VectorXd g = Eigen::VectorXd::Zero(dimension_);
    if (kind_ == Kind::linear) {
        g(0) = 1.0;
    } else {
        g(0) = v(0);
        g(1) = -v(1);
    }
    return g;
}

namespace {

/// min over s > 0 of (s - p)^2 + (c/s - q)^2, i.e. squared distance from
/// (p, q) to the branch {(s, c/s) : s > 0} of the hyperbola xy = c (c != 0).
double branch_min_sq(double p, double q, double c) {
    const double scale = std::max({1.0, std::abs(p), std::abs(q), std::sqrt(std::abs(c))});
    const double s_lo = 1e-9 * scale, s_hi = 1e9 * scale;

    auto dist_sq = [&](double s) {
        const double dx = s - p;
        const double dy = c / s - q;
        return dx * dx + dy * dy;
    };
    auto deriv = [&](double s) { return 2.0 * (s - p) - 2.0 * (c / s - q) * c / (s * s); };

    // Log-spaced scan for derivative sign changes, then bisection on each.
    constexpr int kScan = 600;
    double best = std::numeric_limits<double>::infinity();
    double prev_s = s_lo, prev_d = deriv(s_lo);
    best = std::min(best, dist_sq(s_lo));
    const double ratio = std::pow(s_hi / s_lo, 1.0 / kScan);
    double s = s_lo;
    for (int i = 1; i <= kScan; ++i) {
        s *= ratio;
        const double d = deriv(s);
        if ((prev_d < 0.0) != (d < 0.0)) {
            double lo = prev_s, hi = s;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((deriv(mid) < 0.0) == (prev_d < 0.0)) lo = mid; else hi = mid;
                if (hi - lo <= 1e-15 * hi) break;
            }
            best = std::min(best, dist_sq(0.5 * (lo + hi)));
        }
        best = std::min(best, dist_sq(s));
        prev_s = s;
        prev_d = d;
    }
    return best;
}

/// Distance from (p, q) to the full hyperbola {xy = c}.
double hyperbola_distance(double p, double q, double c) {
    if (c == 0.0) return std::min(std::abs(p), std::abs(q));
    return std::sqrt(std::min(branch_min_sq(p, q, c), branch_min_sq(-p, -q, c)));
}

}  // namespace

double ToyLandscape::dist_to_level(const Eigen::VectorXd& v, double level) const {
    if (kind_ == Kind::linear) return std::abs(v(0) - level);
    // Rotate so that phi = w1 * w2; extra coordinates are free directions.
    const double inv_sqrt2 = 0.70710678118654752440;
    const double p = (v(0) + v(1)) * inv_sqrt2;
    const double q = (v(0) - v(1)) * inv_sqrt2;
    return hyperbola_distance(p, q, level);
}

double ToyLandscape::dist_to_band(const Eigen::VectorXd& v, double lo, double hi) const {
    const double phi = value(v);
    if (phi >= lo && phi <= hi) return 0.0;
    // The nearest band point lies on the facing boundary level set.
    return dist_to_level(v, phi < lo ? lo : hi);
}

double ToyLandscape::dist_to_band_complement(const Eigen::VectorXd& v, double lo, double hi) const {
    const double phi = value(v);
    if (phi <= lo || phi >= hi) return 0.0;
    return std::min(dist_to_level(v, lo), dist_to_level(v, hi));
}

}  // namespace dmp
