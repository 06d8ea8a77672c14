#pragma once

/**
 * @file potential.hpp
 * @brief Potential families F(n, x) with analytic x-derivatives and the
 *        periodic weight rho(t).
 *
 * Built-in families (both even in x, both vanishing at x = 0):
 *   trig_quadratic_half : F(n,x) = a (x^2/2   + cos x - 1) (rho(n) + K)
 *   trig_quadratic      : F(n,x) = a (mu x^2  + cos x - 1) (rho(n) + K), mu > 1/2
 * plus a custom scalar profile g applied as F(n,x) = g(x) (rho(n) + K).
 */

#include <functional>
#include <optional>
#include <string>

#include "dmp/sequence.hpp"

namespace dmp {

struct WeightFunction {
    enum class Kind { constant, cosine };
    Kind kind = Kind::constant;
    double amplitude = 0.0;
    int period = 1;

    /// rho(t); constant: amplitude, cosine: amplitude * cos(2 pi t / period).
    double value(double t) const;
};

struct ScalarProfile {
    std::function<double(double)> g;
    std::function<double(double)> dg;
    std::function<double(double)> ddg;  // optional; finite differences of dg if absent
};

class PotentialSpec {
public:
    enum class Kind { trig_quadratic_half, trig_quadratic, custom_profile };

    /// F(n,x) = a (x^2/2 + cos x - 1)(rho(n)+K). Requires a > 2 for even M,
    /// a > 2(1 + cos(pi/M)) for odd M; K > 0; |rho| < K.
    static PotentialSpec trig_quadratic_half(int period, double a, double K, WeightFunction weight);

    /// F(n,x) = a (mu x^2 + cos x - 1)(rho(n)+K). Same range on a, plus
    /// mu > 1/2 and M >= 6.
    static PotentialSpec trig_quadratic(int period, double a, double mu, double K,
                                        WeightFunction weight);

    /// F(n,x) = g(x) (rho(n)+K).
    static PotentialSpec custom(int period, double K, WeightFunction weight, ScalarProfile profile);

    Kind kind() const { return kind_; }
    int period() const { return period_; }
    double a() const { return a_; }
    double mu() const { return mu_; }
    double K() const { return K_; }
    const WeightFunction& weight() const { return weight_; }

    double weight_plus_K(double t) const { return weight_.value(t) + K_; }

    double eval(int n, double x) const;   // F(n, x)
    double grad(int n, double x) const;   // dF/dx
    double grad2(int n, double x) const;  // d2F/dx2 (analytic for built-ins)

    bool autonomous() const { return weight_.kind == WeightFunction::Kind::constant; }
    bool even_in_x() const;

    std::string fingerprint() const;

private:
    PotentialSpec() = default;

    Kind kind_ = Kind::trig_quadratic;
    int period_ = 0;
    double a_ = 0.0;
    double mu_ = 0.0;
    double K_ = 0.0;
    WeightFunction weight_;
    ScalarProfile profile_;
};

inline double potential_eval(const PotentialSpec& p, int n, double x) { return p.eval(n, x); }
inline double potential_grad(const PotentialSpec& p, int n, double x) { return p.grad(n, x); }

}  // namespace dmp
