#pragma once

#include <stdexcept>

#include "coad/lattice.hpp"

namespace coad {

// gamma_v = e + v + grad phi_v fails to contract: |v| too large.
struct ChartNonContraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChartSolution {
    int bandwidth = 0;            // phi lives on the lattice |k|_inf <= bandwidth
    Eigen::VectorXcd phi;         // scalar potential coefficients, zero mean
    double residual = 0;          // sup |det(D gamma_v) - 1| on the sampling grid
    int iterations = 0;
    double dropped_mean = 0;      // 0-mode of det(Dv + D^2 phi) discarded by the inversion
};

struct ChartOptions {
    double tol = 1e-10;       // grid residual target
    int max_iterations = 60;
    int bandwidth = 0;        // 0: pick 3N capped at 40
    int grid = 64;            // residual sampling grid per axis
};

// Solves the volume constraint det(Id + Dv + D^2 phi) = 1 for the potential
// phi by the fixed-point iteration phi <- Delta^{-1} det(Dv + D^2 phi), where
// Delta is the positive Laplacian (the sign that makes the constraint hold).
// v = grad^perp psi with psi_k = c_k |k|^(beta-2). Throws ChartNonContraction
// when the iteration diverges or stalls above tolerance.
ChartSolution chart_solve(const WaveLattice& lat, const ScalarState& v, const ChartOptions& opt);

// Sup-norm of det(D gamma_v) - 1 on a grid, for an arbitrary candidate phi.
double chart_residual(const WaveLattice& lat, const ScalarState& v, int bandwidth,
                      const Eigen::VectorXcd& phi, int grid);

}  // namespace coad
