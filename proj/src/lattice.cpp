#include "coad/lattice.hpp"

#include <cmath>

namespace coad {

WaveLattice::WaveLattice(int N, double r) : N_(N), r_(r) {
    if (N < 1) throw std::invalid_argument("lattice radius N >= 1 required");
    table_.assign((2 * N + 1) * (2 * N + 1), -1);
    for (int a = -N; a <= N; ++a) {
        for (int b = -N; b <= N; ++b) {
            if (a == 0 && b == 0) continue;
            table_[(a + N) * (2 * N + 1) + (b + N)] = int(modes_.size());
            modes_.emplace_back(a, b);
        }
    }
    neg_.resize(modes_.size());
    absk_.resize(modes_.size());
    wnorm_.resize(modes_.size());
    for (int i = 0; i < size(); ++i) {
        neg_[i] = index(-modes_[i].x(), -modes_[i].y());
        absk_[i] = std::hypot(double(modes_[i].x()), double(modes_[i].y()));
        wnorm_[i] = std::pow(absk_[i], r + 1.0);
    }
}

bool ScalarState::conjugate_symmetric(const WaveLattice& lat, double tol) const {
    for (int i = 0; i < lat.size(); ++i) {
        std::complex<double> d = coef[i] - std::conj(coef[lat.negation(i)]);
        if (std::abs(d) > tol) return false;
    }
    return true;
}

Eigen::VectorXcd galerkin_rhs(const WaveLattice& lat, const ScalarState& s) {
    const int n = lat.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXd pw(n);
    for (int i = 0; i < n; ++i) pw[i] = std::pow(lat.abs_k(i), s.beta - 2.0);

    for (int ik = 0; ik < n; ++ik) {
        int ineg = lat.negation(ik);
        if (ineg < ik) {
            out[ik] = std::conj(out[ineg]);
            continue;
        }
        const Eigen::Vector2i k = lat.mode(ik);
        std::complex<double> acc(0.0, 0.0);
        for (int ip = 0; ip < n; ++ip) {
            const Eigen::Vector2i p = lat.mode(ip);
            int iq = lat.index(k.x() - p.x(), k.y() - p.y());
            if (iq < 0) continue;
            const Eigen::Vector2i q = lat.mode(iq);
            double kernel = double(-p.y() * q.x() + p.x() * q.y()) * pw[ip];
            if (kernel != 0.0) acc += kernel * s.coef[ip] * s.coef[iq];
        }
        out[ik] = acc;
    }
    return out;
}

double invariant_energy(const WaveLattice& lat, const ScalarState& s) {
    double e = 0;
    for (int i = 0; i < lat.size(); ++i)
        e += std::norm(s.coef[i]) * std::pow(lat.abs_k(i), s.beta - 2.0);
    return e;
}

double invariant_casimir(const ScalarState& s) { return s.coef.squaredNorm(); }

Eigen::VectorXcd velocity_coefficients(const WaveLattice& lat, const ScalarState& s) {
    Eigen::VectorXcd u(lat.size());
    for (int i = 0; i < lat.size(); ++i)
        u[i] = s.coef[i] * std::pow(lat.abs_k(i), s.beta - 2.0) * lat.basis_weight(i);
    return u;
}

Eigen::VectorXcd scalar_from_velocity(const WaveLattice& lat, const Eigen::VectorXcd& u,
                                      double beta) {
    Eigen::VectorXcd c(lat.size());
    for (int i = 0; i < lat.size(); ++i)
        c[i] = u[i] / (std::pow(lat.abs_k(i), beta - 2.0) * lat.basis_weight(i));
    return c;
}

}  // namespace coad
