#include "coad/detfun.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace coad {

std::complex<double> DetPLog::value() const {
    if (std::isinf(log_magnitude) && log_magnitude < 0) return {0.0, 0.0};
    double m = std::exp(std::min(log_magnitude, 700.0));
    return m * phase;
}

DetPLog regularized_det_log(const Eigen::MatrixXcd& T, int p) {
    if (T.rows() != T.cols()) throw std::invalid_argument("det_p: square matrix required");
    if (p < 1) throw std::invalid_argument("det_p: p >= 1 required");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("det_p: eigenvalue solver failed");

    DetPLog out;
    double logmag = 0;
    double arg = 0;
    for (int i = 0; i < T.rows(); ++i) {
        std::complex<double> lam = es.eigenvalues()[i];
        std::complex<double> factor = std::complex<double>(1, 0) + lam;
        if (factor == std::complex<double>(0, 0)) {
            out.log_magnitude = -std::numeric_limits<double>::infinity();
            out.phase = {1, 0};
            return out;
        }
        logmag += std::log(std::abs(factor));
        arg += std::arg(factor);
        std::complex<double> expo(0, 0);
        std::complex<double> pw = lam;
        double sign = -1;
        for (int j = 1; j <= p - 1; ++j) {
            expo += sign * pw / double(j);
            pw *= lam;
            sign = -sign;
        }
        logmag += expo.real();
        arg += expo.imag();
    }
    out.log_magnitude = logmag;
    out.phase = {std::cos(arg), std::sin(arg)};
    return out;
}

std::complex<double> regularized_det(const Eigen::MatrixXcd& T, int p) {
    return regularized_det_log(T, p).value();
}

}  // namespace coad
