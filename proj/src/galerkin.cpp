#include "coad/galerkin.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace coad {

namespace {

double perp_dot(const Eigen::Vector2i& a, const Eigen::Vector2i& b) {
    return double(-a.y() * b.x() + a.x() * b.y());
}

Eigen::VectorXcd stream_coefficients(const WaveLattice& lat, const ScalarState& s) {
    Eigen::VectorXcd psi(lat.size());
    for (int i = 0; i < lat.size(); ++i)
        psi[i] = s.coef[i] * std::pow(lat.abs_k(i), s.beta - 2.0);
    return psi;
}

}  // namespace

TruncatedOperatorMatrix k_matrix(const WaveLattice& lat, const ScalarState& u0) {
    const int n = lat.size();
    const double r = lat.r();
    Eigen::VectorXcd psi0 = stream_coefficients(lat, u0);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int il = 0; il < n; ++il) {
        const Eigen::Vector2i l = lat.mode(il);
        for (int im = 0; im < n; ++im) {
            const Eigen::Vector2i m = lat.mode(im);
            int id = lat.index(m.x() - l.x(), m.y() - l.y());
            if (id < 0) continue;
            double dd = lat.abs_k(id);
            double w = -perp_dot(l, m) * std::pow(dd, 2.0 + 2.0 * r) /
                       (lat.basis_weight(im) * lat.basis_weight(il));
            if (w != 0.0) M(im, il) = w * psi0[id];
        }
    }
    return {std::move(M), r, "K"};
}

TruncatedOperatorMatrix ad_matrix(const WaveLattice& lat, const ScalarState& u) {
    const int n = lat.size();
    Eigen::VectorXcd psi = stream_coefficients(lat, u);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int il = 0; il < n; ++il) {
        const Eigen::Vector2i l = lat.mode(il);
        for (int im = 0; im < n; ++im) {
            const Eigen::Vector2i m = lat.mode(im);
            int id = lat.index(m.x() - l.x(), m.y() - l.y());
            if (id < 0) continue;
            double w = -perp_dot(l, m) * lat.basis_weight(im) / lat.basis_weight(il);
            if (w != 0.0) M(im, il) = w * psi[id];
        }
    }
    return {std::move(M), lat.r(), "ad"};
}

TruncatedOperatorMatrix build_lambda(const TruncatedOperatorMatrix& A) {
    Eigen::MatrixXcd L = A.entries.adjoint() * A.entries;
    L = 0.5 * (L + L.adjoint()).eval();
    return {std::move(L), A.r, "Lambda"};
}

double lambda_condition(const Eigen::MatrixXcd& A) {
    Eigen::MatrixXcd lam = A.adjoint() * A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lam, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

struct GeodesicStepper::Deriv {
    Eigen::VectorXcd c;
    Eigen::MatrixXcd A, Phi, Omega;
};

GeodesicStepper::GeodesicStepper(const WaveLattice& lat, const ScalarState& u0, double dt,
                                 bool with_transport, bool with_jacobi)
    : lat_(&lat),
      kind_(u0.kind),
      beta_(u0.beta),
      dt_(dt),
      with_transport_(with_transport || with_jacobi),
      with_jacobi_(with_jacobi) {
    const int n = lat.size();
    y_.c = u0.coef;
    if (with_transport_) y_.A = Eigen::MatrixXcd::Identity(n, n);
    if (with_jacobi_) {
        K_ = k_matrix(lat, u0).entries;
        y_.Phi = Eigen::MatrixXcd::Zero(n, n);
        y_.Omega = Eigen::MatrixXcd::Zero(n, n);
    }
}

ScalarState GeodesicStepper::scalar_state() const { return {kind_, beta_, y_.c}; }

GeodesicStepper::Deriv GeodesicStepper::eval(const FlowState& y) const {
    Deriv d;
    ScalarState s{kind_, beta_, y.c};
    d.c = galerkin_rhs(*lat_, s);
    if (with_transport_) {
        Eigen::MatrixXcd ad = ad_matrix(*lat_, s).entries;
        d.A.noalias() = ad * y.A;
    }
    if (with_jacobi_) {
        Eigen::MatrixXcd lam = y.A.adjoint() * y.A;
        Eigen::LLT<Eigen::MatrixXcd> llt(lam);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("Lambda factorization failed");
        const int n = lat_->size();
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Identity(n, n) - K_ * y.Phi;
        d.Phi = llt.solve(rhs);
        d.Omega = llt.solve(Eigen::MatrixXcd::Identity(n, n));
    }
    return d;
}

FlowState GeodesicStepper::axpy(const FlowState& y, double h, const Deriv& d) const {
    FlowState out;
    out.c = y.c + h * d.c;
    if (with_transport_) out.A = y.A + h * d.A;
    if (with_jacobi_) {
        out.Phi = y.Phi + h * d.Phi;
        out.Omega = y.Omega + h * d.Omega;
    }
    return out;
}

void GeodesicStepper::step_with(double h) {
    Deriv k1 = eval(y_);
    Deriv k2 = eval(axpy(y_, h / 2, k1));
    Deriv k3 = eval(axpy(y_, h / 2, k2));
    Deriv k4 = eval(axpy(y_, h, k3));
    y_.c += (h / 6) * (k1.c + 2 * k2.c + 2 * k3.c + k4.c);
    if (with_transport_) y_.A += (h / 6) * (k1.A + 2 * k2.A + 2 * k3.A + k4.A);
    if (with_jacobi_) {
        y_.Phi += (h / 6) * (k1.Phi + 2 * k2.Phi + 2 * k3.Phi + k4.Phi);
        y_.Omega += (h / 6) * (k1.Omega + 2 * k2.Omega + 2 * k3.Omega + k4.Omega);
    }
    t_ += h;
}

void GeodesicStepper::step() { step_with(dt_); }

GeodesicTrajectory integrate_geodesic(const WaveLattice& lat, const ScalarState& u0,
                                      const IntegrateOptions& opt) {
    GeodesicTrajectory traj;
    traj.kind = u0.kind;
    traj.beta = u0.beta;
    traj.r = lat.r();
    traj.dt = opt.dt;

    GeodesicStepper st(lat, u0, opt.dt, opt.with_transport, opt.with_jacobi);

    const long long steps = std::llround(opt.t_max / opt.dt);
    auto push_sample = [&](bool force_ops) {
        const FlowState& y = st.state();
        TrajectorySample smp;
        smp.t = st.t();
        smp.state = y.c;
        ScalarState s{u0.kind, u0.beta, y.c};
        smp.energy = invariant_energy(lat, s);
        smp.casimir = invariant_casimir(s);
        if (opt.with_jacobi) smp.lambda_cond = lambda_condition(y.A);
        if ((opt.store_operators || force_ops) && (opt.with_transport || opt.with_jacobi)) {
            smp.A = y.A;
            smp.Phi = y.Phi;
            smp.Omega = y.Omega;
        }
        traj.samples.push_back(std::move(smp));
    };

    push_sample(false);
    for (long long s = 1; s <= steps; ++s) {
        try {
            st.step();
        } catch (const std::runtime_error&) {
            traj.lambda_failed = true;
            traj.abort_time = st.t();
            return traj;
        }
        bool last = s == steps;
        if (st.state().c.cwiseAbs().maxCoeff() > opt.blowup_guard) {
            traj.blew_up = true;
            traj.abort_time = st.t();
            push_sample(true);
            return traj;
        }
        if (s % opt.sample_stride == 0 || last) {
            push_sample(last);
            if (opt.with_jacobi && traj.samples.back().lambda_cond > opt.cond_limit) {
                traj.lambda_failed = true;
                traj.abort_time = st.t();
                return traj;
            }
        }
    }
    return traj;
}

Eigen::MatrixXcd transport_exponential(const WaveLattice& lat, const ScalarState& u0, double t) {
    Eigen::MatrixXcd ad = ad_matrix(lat, u0).entries;
    return (t * ad).exp();
}

Eigen::MatrixXcd dexp_fd_oracle(const WaveLattice& lat, const ScalarState& u0, double t,
                                double eps, double dt) {
    const int n = lat.size();
    long long steps = std::llround(t / dt);
    if (steps % 2 == 1) {  // Simpson needs an even interval count
        ++steps;
        dt = t / double(steps);
    }

    // unperturbed transport, LU-factored at the quadrature nodes
    std::vector<Eigen::PartialPivLU<Eigen::MatrixXcd>> alu;
    alu.reserve(steps + 1);
    {
        GeodesicStepper st(lat, u0, dt, true, false);
        alu.emplace_back(st.state().A);
        for (long long i = 0; i < steps; ++i) {
            st.step();
            alu.emplace_back(st.state().A);
        }
    }

    auto solve_scalar = [&](const Eigen::VectorXcd& c0) {
        std::vector<Eigen::VectorXcd> path;
        path.reserve(steps + 1);
        ScalarState s{u0.kind, u0.beta, c0};
        ScalarState tmp = s;
        auto f = [&](const Eigen::VectorXcd& v) {
            tmp.coef = v;
            return galerkin_rhs(lat, tmp);
        };
        path.push_back(s.coef);
        for (long long i = 0; i < steps; ++i) {
            const Eigen::VectorXcd c = s.coef;
            Eigen::VectorXcd k1 = f(c);
            Eigen::VectorXcd k2 = f(c + (dt / 2) * k1);
            Eigen::VectorXcd k3 = f(c + (dt / 2) * k2);
            Eigen::VectorXcd k4 = f(c + dt * k3);
            s.coef = c + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
            path.push_back(s.coef);
        }
        return path;
    };

    Eigen::VectorXd to_scalar(n), to_velocity(n);
    for (int i = 0; i < n; ++i) {
        to_velocity[i] = std::pow(lat.abs_k(i), u0.beta - 2.0) * lat.basis_weight(i);
        to_scalar[i] = 1.0 / to_velocity[i];
    }
    Eigen::VectorXcd to_velocity_c = to_velocity.cast<std::complex<double>>();

    auto quadrature_column = [&](const Eigen::VectorXcd& dc_dir) {
        std::vector<Eigen::VectorXcd> up = solve_scalar(u0.coef + eps * dc_dir);
        std::vector<Eigen::VectorXcd> um = solve_scalar(u0.coef - eps * dc_dir);
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
        auto node = [&](long long i) {
            Eigen::VectorXcd du = (up[i] - um[i]) / (2 * eps);
            return alu[i].solve(du.cwiseProduct(to_velocity_c).eval());
        };
        for (long long i = 0; i + 2 <= steps; i += 2)
            acc += (dt / 3) * (node(i) + 4 * node(i + 1) + node(i + 2));
        return acc;
    };

    // real perturbation directions spanning each {k, -k} pair; the columns of
    // the complex basis directions follow by linearity of the derivative
    Eigen::MatrixXcd out(n, n);
    std::vector<bool> done(n, false);
    const std::complex<double> ci(0, 1);
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        int ineg = lat.negation(i);
        Eigen::VectorXcd dre = Eigen::VectorXcd::Zero(n);
        dre[i] = to_scalar[i];
        dre[ineg] += to_scalar[ineg];
        Eigen::VectorXcd dim = Eigen::VectorXcd::Zero(n);
        dim[i] = ci * to_scalar[i];
        dim[ineg] += -ci * to_scalar[ineg];

        Eigen::VectorXcd col_re = quadrature_column(dre);
        Eigen::VectorXcd col_im = quadrature_column(dim);
        out.col(i) = 0.5 * (col_re - ci * col_im);
        out.col(ineg) = 0.5 * (col_re + ci * col_im);
        done[i] = done[ineg] = true;
    }
    return out;
}

}  // namespace coad
