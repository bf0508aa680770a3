#pragma once

#include <Eigen/Dense>
#include <complex>

namespace coad {

// Regularized determinant over the eigenvalues {lambda_i} of T:
//   det_p(T) = prod_i (1 + lambda_i) exp( sum_{j=1}^{p-1} (-1)^j lambda_i^j / j ).
// det_1 is the plain determinant of Id + T; Id + T is invertible iff
// det_p(T) != 0 for any p.
std::complex<double> regularized_det(const Eigen::MatrixXcd& T, int p);

// Log-space form, safe for large matrices: value = exp(log_magnitude) * phase.
struct DetPLog {
    double log_magnitude = 0;           // -inf when Id + T is singular
    std::complex<double> phase{1, 0};   // unit modulus
    std::complex<double> value() const; // clamped exponentiation
};

DetPLog regularized_det_log(const Eigen::MatrixXcd& T, int p);

}  // namespace coad
