#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace coad {

// Fourier truncation of the exact divergence-free fields on the flat 2-torus:
// integer wave vectors k != 0 with max-norm at most N, in a fixed
// deterministic order, closed under negation. The metric order r fixes the
// Hdot^r normalization of the velocity basis E_k = grad^perp e^{ikx} / |k|^{r+1}.
class WaveLattice {
  public:
    WaveLattice(int N, double r);

    int N() const { return N_; }
    double r() const { return r_; }
    int size() const { return int(modes_.size()); }

    const Eigen::Vector2i& mode(int i) const { return modes_[i]; }
    // index of (a, b), or -1 when outside the lattice (or zero)
    int index(int a, int b) const {
        if (std::abs(a) > N_ || std::abs(b) > N_) return -1;
        return table_[(a + N_) * (2 * N_ + 1) + (b + N_)];
    }
    int negation(int i) const { return neg_[i]; }

    double abs_k(int i) const { return absk_[i]; }
    // |k|^(r+1), the Hdot^r length of grad^perp e^(ikx)
    double basis_weight(int i) const { return wnorm_[i]; }

  private:
    int N_;
    double r_;
    std::vector<Eigen::Vector2i> modes_;
    std::vector<int> table_;
    std::vector<int> neg_;
    std::vector<double> absk_;
    std::vector<double> wnorm_;
};

enum class ScalarKind { Euler, GSqg };

// Truncated active scalar: vorticity (Euler, beta = 0) or theta (gSQG).
// Stream function psi_k = c_k |k|^(beta-2), velocity u = grad^perp psi.
struct ScalarState {
    ScalarKind kind = ScalarKind::Euler;
    double beta = 0.0;
    Eigen::VectorXcd coef;

    bool conjugate_symmetric(const WaveLattice& lat, double tol = 0.0) const;
};

// Truncated advection term -P_N(u . grad c) as a polynomial convolution with
// kernel (p^perp . q)|p|^(beta-2). Requires a conjugate-symmetric state; the
// mirrored half-lattice assembly preserves that symmetry exactly.
Eigen::VectorXcd galerkin_rhs(const WaveLattice& lat, const ScalarState& s);

// Quadratic invariants: energy sum |c|^2 |k|^(beta-2) (kinetic energy for
// Euler, the Hamiltonian for gSQG) and the quadratic Casimir sum |c|^2
// (enstrophy for Euler).
double invariant_energy(const WaveLattice& lat, const ScalarState& s);
double invariant_casimir(const ScalarState& s);

// Velocity coefficients in the normalized basis: u_l = c_l |l|^(beta-2+r+1).
Eigen::VectorXcd velocity_coefficients(const WaveLattice& lat, const ScalarState& s);
// Inverse map: scalar coefficients of a velocity given in the normalized basis.
Eigen::VectorXcd scalar_from_velocity(const WaveLattice& lat, const Eigen::VectorXcd& u,
                                      double beta);

}  // namespace coad
