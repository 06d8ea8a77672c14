#include "dmp/sequence.hpp"

#include <cmath>

namespace dmp {

PeriodicSequence::PeriodicSequence(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("PeriodicSequence: period must be positive");
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("PeriodicSequence: values must be finite");
    }
}

PeriodicSequence PeriodicSequence::zeros(int period) {
    if (period <= 0) throw std::invalid_argument("PeriodicSequence: period must be positive");
    return PeriodicSequence(std::vector<double>(static_cast<std::size_t>(period), 0.0));
}

PeriodicSequence PeriodicSequence::constant(int period, double value) {
    if (period <= 0) throw std::invalid_argument("PeriodicSequence: period must be positive");
    return PeriodicSequence(std::vector<double>(static_cast<std::size_t>(period), value));
}

std::size_t PeriodicSequence::wrap(long n) const {
    const long m = static_cast<long>(values_.size());
    long r = (n - 1) % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

PeriodicSequence PeriodicSequence::shifted(int by) const {
    const int m = period();
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int n = 1; n <= m; ++n) out[static_cast<std::size_t>(n - 1)] = at(n + by);
    return PeriodicSequence(std::move(out));
}

PeriodicSequence& PeriodicSequence::operator+=(const PeriodicSequence& rhs) {
    if (period() != rhs.period()) throw std::invalid_argument("PeriodicSequence: period mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    return *this;
}

PeriodicSequence& PeriodicSequence::operator-=(const PeriodicSequence& rhs) {
    if (period() != rhs.period()) throw std::invalid_argument("PeriodicSequence: period mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    return *this;
}

PeriodicSequence& PeriodicSequence::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

PeriodicSequence forward_difference(const PeriodicSequence& u) {
    const int m = u.period();
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int s = 1; s <= m; ++s) out[static_cast<std::size_t>(s - 1)] = u.at(s + 1) - u.at(s);
    return PeriodicSequence(std::move(out));
}

double second_difference(const PeriodicSequence& u, int n) {
    if (n < 1 || n > u.period()) throw std::out_of_range("second_difference: index out of range");
    return u.at(n + 1) - 2.0 * u.at(n) + u.at(n - 1);
}

double inner_product(const PeriodicSequence& x, const PeriodicSequence& y) {
    if (x.period() != y.period()) throw std::invalid_argument("inner_product: period mismatch");
    double acc = 0.0;
    for (int s = 1; s <= x.period(); ++s) acc += x.at(s) * y.at(s);
    return acc;
}

double norm(const PeriodicSequence& x) { return std::sqrt(inner_product(x, x)); }

double beta_norm(const PeriodicSequence& x, double beta) {
    if (beta < 1.0) throw std::invalid_argument("beta_norm: beta must be >= 1");
    double acc = 0.0;
    for (double v : x.values()) acc += std::pow(std::abs(v), beta);
    return std::pow(acc, 1.0 / beta);
}

double distance(const PeriodicSequence& x, const PeriodicSequence& y) {
    PeriodicSequence d = x;
    d -= y;
    return norm(d);
}

}  // namespace dmp
