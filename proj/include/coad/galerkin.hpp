#pragma once

#include <memory>

#include "coad/lattice.hpp"

namespace coad {

// Dense matrix over the normalized divergence-free Fourier basis. The basis
// is orthonormal in the Hdot^r inner product, so metric adjoints are
// conjugate transposes.
struct TruncatedOperatorMatrix {
    Eigen::MatrixXcd entries;
    double r = 0.0;
    std::string label;
};

// K_r(u0): w -> ad*_w u0, assembled from the stream-function Poisson bracket.
TruncatedOperatorMatrix k_matrix(const WaveLattice& lat, const ScalarState& u0);

// ad_u: w -> -[u, w] projected to the lattice.
TruncatedOperatorMatrix ad_matrix(const WaveLattice& lat, const ScalarState& u);

// Lambda = A^H A; Hermitian positive definite while A is invertible.
TruncatedOperatorMatrix build_lambda(const TruncatedOperatorMatrix& A);

// Coupled state advanced by the geodesic stepper.
struct FlowState {
    Eigen::VectorXcd c;
    Eigen::MatrixXcd A, Phi, Omega;
};

// Fixed-step classical 4th-order stepper for the truncated flow and its
// transport/Jacobi operators:
//   dc/dt     = -P_N(u . grad c)
//   dA/dt     = ad_u A,                    A(0)     = Id
//   dPhi/dt   = Lam^{-1} - Lam^{-1} K Phi, Phi(0)   = 0,  Lam = A^H A
//   dOmega/dt = Lam^{-1},                  Omega(0) = 0
// Copyable; a copy is a resumable snapshot.
class GeodesicStepper {
  public:
    GeodesicStepper(const WaveLattice& lat, const ScalarState& u0, double dt,
                    bool with_transport, bool with_jacobi);

    void step();
    // steps with a temporary step size (bisection refinement)
    void step_with(double dt);

    double t() const { return t_; }
    double dt() const { return dt_; }
    const FlowState& state() const { return y_; }
    const Eigen::MatrixXcd& k_mat() const { return K_; }
    bool with_jacobi() const { return with_jacobi_; }

    ScalarState scalar_state() const;

  private:
    const WaveLattice* lat_;
    ScalarKind kind_;
    double beta_;
    double dt_;
    bool with_transport_;
    bool with_jacobi_;
    Eigen::MatrixXcd K_;
    FlowState y_;
    double t_ = 0.0;

    struct Deriv;
    Deriv eval(const FlowState& y) const;
    FlowState axpy(const FlowState& y, double h, const Deriv& d) const;
};

struct TrajectorySample {
    double t = 0;
    Eigen::VectorXcd state;
    Eigen::MatrixXcd A, Phi, Omega;  // empty unless operators were stored
    double energy = 0;
    double casimir = 0;
    double lambda_cond = 1.0;
};

struct GeodesicTrajectory {
    ScalarKind kind = ScalarKind::Euler;
    double beta = 0;
    double r = 0;
    double dt = 0;
    std::vector<TrajectorySample> samples;
    bool blew_up = false;
    bool lambda_failed = false;
    double abort_time = 0;
};

struct IntegrateOptions {
    double t_max = 1.0;
    double dt = 1e-2;
    int sample_stride = 1;        // store a sample every this many steps
    bool with_transport = true;   // advance A
    bool with_jacobi = true;      // advance Phi, Omega (requires transport)
    bool store_operators = false; // keep matrices at every sample, not just the last
    double blowup_guard = 1e6;    // abort when max |c| exceeds this
    double cond_limit = 1e12;     // abort when cond(Lambda) exceeds this
};

// Integrates to t_max; on blow-up or Lambda failure returns the partial
// trajectory with the corresponding flag set.
GeodesicTrajectory integrate_geodesic(const WaveLattice& lat, const ScalarState& u0,
                                      const IntegrateOptions& opt);

// Central finite differences of the trivialized solution map over real basis
// perturbations u0 +- eps w, assembled into a matrix comparable to Phi(t):
// columns are Simpson quadratures of A(tau)^{-1} du(tau)/deps.
Eigen::MatrixXcd dexp_fd_oracle(const WaveLattice& lat, const ScalarState& u0, double t,
                                double eps, double dt);

// Matrix of the stationary-flow transport operator exp(t ad_{u0}).
Eigen::MatrixXcd transport_exponential(const WaveLattice& lat, const ScalarState& u0, double t);

double lambda_condition(const Eigen::MatrixXcd& A);

}  // namespace coad
