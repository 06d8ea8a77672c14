#include "dmp/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dmp {

double WeightFunction::value(double t) const {
    switch (kind) {
        case Kind::constant: return amplitude;
        case Kind::cosine: return amplitude * std::cos(2.0 * std::numbers::pi * t / period);
    }
    throw std::logic_error("WeightFunction: unknown kind");
}

namespace {

double amplitude_threshold(int period) {
    // a > 2 for even periods, a > 2(1 + cos(pi/M)) for odd ones.
    if (period % 2 == 0) return 2.0;
    return 2.0 * (1.0 + std::cos(std::numbers::pi / period));
}

void validate_weight(const WeightFunction& w, int period, double K) {
    if (w.period != period) throw std::invalid_argument("PotentialSpec: weight period mismatch");
    // |rho(t)| < K, checked over a sample grid covering one period.
    for (int i = 0; i <= 4 * period; ++i) {
        const double t = static_cast<double>(i) * period / (4.0 * period);
        if (!(std::abs(w.value(t)) < K)) {
            throw std::invalid_argument("PotentialSpec: weight must satisfy |rho(t)| < K");
        }
    }
}

}  // namespace

PotentialSpec PotentialSpec::trig_quadratic_half(int period, double a, double K,
                                                 WeightFunction weight) {
    if (period < 3) throw std::invalid_argument("PotentialSpec: period must be >= 3");
    if (K <= 0.0) throw std::invalid_argument("PotentialSpec: K must be positive");
    if (!(a > amplitude_threshold(period))) {
        throw std::invalid_argument("PotentialSpec: amplitude a below admissible threshold");
    }
    validate_weight(weight, period, K);
    PotentialSpec p;
    p.kind_ = Kind::trig_quadratic_half;
    p.period_ = period;
    p.a_ = a;
    p.mu_ = 0.5;
    p.K_ = K;
    p.weight_ = weight;
    return p;
}

PotentialSpec PotentialSpec::trig_quadratic(int period, double a, double mu, double K,
                                            WeightFunction weight) {
    if (period < 6) throw std::invalid_argument("PotentialSpec: trig_quadratic requires period >= 6");
    if (K <= 0.0) throw std::invalid_argument("PotentialSpec: K must be positive");
    if (!(mu > 0.5)) throw std::invalid_argument("PotentialSpec: mu must exceed 1/2");
    if (!(a > amplitude_threshold(period))) {
        throw std::invalid_argument("PotentialSpec: amplitude a below admissible threshold");
    }
    validate_weight(weight, period, K);
    PotentialSpec p;
    p.kind_ = Kind::trig_quadratic;
    p.period_ = period;
    p.a_ = a;
    p.mu_ = mu;
    p.K_ = K;
    p.weight_ = weight;
    return p;
}

PotentialSpec PotentialSpec::custom(int period, double K, WeightFunction weight,
                                    ScalarProfile profile) {
    if (period < 3) throw std::invalid_argument("PotentialSpec: period must be >= 3");
    if (K <= 0.0) throw std::invalid_argument("PotentialSpec: K must be positive");
    if (!profile.g || !profile.dg) {
        throw std::invalid_argument("PotentialSpec: custom profile needs g and dg");
    }
    validate_weight(weight, period, K);
    PotentialSpec p;
    p.kind_ = Kind::custom_profile;
    p.period_ = period;
    p.K_ = K;
    p.weight_ = weight;
    p.profile_ = std::move(profile);
    return p;
}

double PotentialSpec::eval(int n, double x) const {
    const double w = weight_plus_K(n);
    switch (kind_) {
        case Kind::trig_quadratic_half: return a_ * (0.5 * x * x + std::cos(x) - 1.0) * w;
        case Kind::trig_quadratic: return a_ * (mu_ * x * x + std::cos(x) - 1.0) * w;
        case Kind::custom_profile: return profile_.g(x) * w;
    }
    throw std::logic_error("PotentialSpec: unknown kind");
}

double PotentialSpec::grad(int n, double x) const {
    const double w = weight_plus_K(n);
    switch (kind_) {
        case Kind::trig_quadratic_half: return a_ * (x - std::sin(x)) * w;
        case Kind::trig_quadratic: return a_ * (2.0 * mu_ * x - std::sin(x)) * w;
        case Kind::custom_profile: return profile_.dg(x) * w;
    }
    throw std::logic_error("PotentialSpec: unknown kind");
}

double PotentialSpec::grad2(int n, double x) const {
    const double w = weight_plus_K(n);
    switch (kind_) {
        case Kind::trig_quadratic_half: return a_ * (1.0 - std::cos(x)) * w;
        case Kind::trig_quadratic: return a_ * (2.0 * mu_ - std::cos(x)) * w;
        case Kind::custom_profile:
            if (profile_.ddg) return profile_.ddg(x) * w;
            {
                const double h = 1e-6 * (1.0 + std::abs(x));
                return (profile_.dg(x + h) - profile_.dg(x - h)) / (2.0 * h) * w;
            }
    }
    throw std::logic_error("PotentialSpec: unknown kind");
}

bool PotentialSpec::even_in_x() const {
    if (kind_ != Kind::custom_profile) return true;
    // Sampled evenness test for custom profiles.
    for (double x : {0.3, 1.1, 2.7, 5.9, 17.3}) {
        if (std::abs(profile_.g(x) - profile_.g(-x)) > 1e-12 * (1.0 + std::abs(profile_.g(x)))) {
            return false;
        }
    }
    return true;
}

std::string PotentialSpec::fingerprint() const {
    std::ostringstream os;
    os << "M=" << period_ << ";kind=";
    switch (kind_) {
        case Kind::trig_quadratic_half: os << "trig_quadratic_half;a=" << a_; break;
        case Kind::trig_quadratic: os << "trig_quadratic;a=" << a_ << ";mu=" << mu_; break;
        case Kind::custom_profile: os << "custom_profile"; break;
    }
    os << ";K=" << K_ << ";weight=";
    os << (weight_.kind == WeightFunction::Kind::constant ? "constant" : "cosine");
    os << ":" << weight_.amplitude;
    return os.str();
}

}  // namespace dmp
