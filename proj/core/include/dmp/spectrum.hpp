#pragma once

/**
 * @file spectrum.hpp
 * @brief The circulant second-difference quadratic form on the M-ring and its
 *        closed-form spectrum.
 *
 * The ring Laplacian here is the M x M circulant matrix with 2 on the diagonal
 * and -1 on the two cyclic off-diagonals; u^T L u equals the sum of squared
 * forward differences. Its eigenvalues are 2 - 2 cos(2 pi j / M), j = 0..M-1.
 */

#include <vector>

#include <Eigen/Dense>

#include "dmp/sequence.hpp"

namespace dmp {

struct Spectrum {
    int period = 0;
    std::vector<double> eigenvalues;  // sorted ascending, size M
    double lambda_min_nonzero = 0.0;  // 2(1 - cos(2 pi / M))
    double lambda_max = 0.0;          // 4 for even M, 2(1 + cos(pi / M)) for odd M
};

Eigen::MatrixXd ring_laplacian_matrix(int period);

/// Sum of squared forward differences; cross-checked against the explicit
/// matrix product u^T L u (the two must agree to 1e-12 * (1 + |u|^2)).
double laplacian_quadratic_form(const PeriodicSequence& u);

/// Closed-form circulant spectrum. Requires period >= 3.
Spectrum laplacian_spectrum(int period);

/// Dense symmetric eigensolve of the explicit matrix; retained as the
/// independent route for cross-checking the closed form.
std::vector<double> laplacian_spectrum_dense(int period);

double lambda_max_closed_form(int period);
double lambda_min_nonzero_closed_form(int period);

}  // namespace dmp
