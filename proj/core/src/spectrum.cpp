#include "dmp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dmp {

Eigen::MatrixXd ring_laplacian_matrix(int period) {
    if (period < 3) throw std::invalid_argument("ring_laplacian_matrix: period must be >= 3");
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(period, period);
    for (int i = 0; i < period; ++i) {
        l(i, i) = 2.0;
        l(i, (i + 1) % period) = -1.0;
        l(i, (i + period - 1) % period) = -1.0;
    }
    return l;
}

double laplacian_quadratic_form(const PeriodicSequence& u) {
    const int m = u.period();
    double stencil = 0.0;
    for (int s = 1; s <= m; ++s) {
        const double d = u.at(s + 1) - u.at(s);
        stencil += d * d;
    }
    // Explicit matrix route for the cross-check.
    double dense = 0.0;
    for (int n = 1; n <= m; ++n) {
        dense += u.at(n) * (2.0 * u.at(n) - u.at(n - 1) - u.at(n + 1));
    }
    const double nrm2 = inner_product(u, u);
    if (std::abs(stencil - dense) > 1e-12 * (1.0 + nrm2)) {
        throw std::runtime_error("laplacian_quadratic_form: stencil and matrix routes disagree");
    }
    return stencil;
}

double lambda_max_closed_form(int period) {
    if (period % 2 == 0) return 4.0;
    return 2.0 * (1.0 + std::cos(std::numbers::pi / period));
}

double lambda_min_nonzero_closed_form(int period) {
    return 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / period));
}

Spectrum laplacian_spectrum(int period) {
    if (period < 3) throw std::invalid_argument("laplacian_spectrum: period must be >= 3");
    Spectrum sp;
    sp.period = period;
    sp.eigenvalues.resize(static_cast<std::size_t>(period));
    for (int j = 0; j < period; ++j) {
        sp.eigenvalues[static_cast<std::size_t>(j)] =
            2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * j / period);
    }
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    sp.lambda_min_nonzero = lambda_min_nonzero_closed_form(period);
    sp.lambda_max = lambda_max_closed_form(period);
    return sp;
}

std::vector<double> laplacian_spectrum_dense(int period) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ring_laplacian_matrix(period));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("laplacian_spectrum_dense: eigensolver failed");
    }
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dmp
