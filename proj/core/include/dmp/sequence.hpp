#pragma once

/**
 * @file sequence.hpp
 * @brief M-periodic real sequences and the difference calculus on them.
 *
 * One period is stored; indexing is 1-based on the outside (n in 1..M) with
 * wraparound, so at(0) == at(M) and at(M+1) == at(1). Internally the values
 * live in a 0-based vector; wrap() is the only place the two conventions meet.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dmp {

class PeriodicSequence {
public:
    PeriodicSequence() = default;

    explicit PeriodicSequence(std::vector<double> values);

    static PeriodicSequence zeros(int period);
    static PeriodicSequence constant(int period, double value);

    int period() const { return static_cast<int>(values_.size()); }

    /// 1-based accessor with wraparound over the whole integer line.
    double at(long n) const { return values_[wrap(n)]; }
    void set(long n, double v) { values_[wrap(n)] = v; }

    const std::vector<double>& values() const& { return values_; }
    std::vector<double>& values() & { return values_; }
    std::vector<double> values() && { return std::move(values_); }

    PeriodicSequence shifted(int by) const;  // u_n -> u_{n+by}

    PeriodicSequence& operator+=(const PeriodicSequence& rhs);
    PeriodicSequence& operator-=(const PeriodicSequence& rhs);
    PeriodicSequence& operator*=(double s);

    friend PeriodicSequence operator+(PeriodicSequence a, const PeriodicSequence& b) { return a += b; }
    friend PeriodicSequence operator-(PeriodicSequence a, const PeriodicSequence& b) { return a -= b; }
    friend PeriodicSequence operator*(double s, PeriodicSequence a) { return a *= s; }
    friend PeriodicSequence operator*(PeriodicSequence a, double s) { return a *= s; }

    bool operator==(const PeriodicSequence&) const = default;

private:
    std::size_t wrap(long n) const;
    std::vector<double> values_;
};

/// (Delta u)_s = u_{s+1} - u_s; the result telescopes to zero over one period.
PeriodicSequence forward_difference(const PeriodicSequence& u);

/// u_{n+1} - 2 u_n + u_{n-1} for 1 <= n <= period.
double second_difference(const PeriodicSequence& u, int n);

double inner_product(const PeriodicSequence& x, const PeriodicSequence& y);
double norm(const PeriodicSequence& x);
double beta_norm(const PeriodicSequence& x, double beta);

double distance(const PeriodicSequence& x, const PeriodicSequence& y);

}  // namespace dmp
