#include "coad/scan.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "coad/detfun.hpp"

namespace coad {

namespace {

struct Probe {
    double det;
    double sigma_min;
    double sigma_max;
    Eigen::VectorXcd witness;
};

Probe probe(const FlowState& y, int det_order) {
    Probe pr;
    Eigen::PartialPivLU<Eigen::MatrixXcd> olu(y.Omega);
    Eigen::MatrixXcd T = olu.solve(y.Phi);
    T -= Eigen::MatrixXcd::Identity(T.rows(), T.cols());
    DetPLog d = regularized_det_log(T, det_order);
    pr.det = d.value().real();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(y.Phi, Eigen::ComputeThinV);
    pr.sigma_min = svd.singularValues().minCoeff();
    pr.sigma_max = svd.singularValues().maxCoeff();
    pr.witness = svd.matrixV().col(T.rows() - 1);
    return pr;
}

}  // namespace

ScanReport conjugate_scan(const WaveLattice& lat, const ScalarState& u0, const ScanOptions& opt) {
    ScanReport rep;
    rep.N = lat.N();
    rep.r = lat.r();
    rep.t_max = opt.t_max;
    rep.dt = opt.dt;
    rep.det_order = opt.det_order;

    GeodesicStepper st(lat, u0, opt.dt, true, true);
    const long long steps = std::llround(opt.t_max / opt.dt);

    auto record = [&](const GeodesicStepper& s, const Probe& pr) {
        ScanSample smp;
        smp.t = s.t();
        smp.det = pr.det;
        smp.sigma_min = pr.sigma_min;
        smp.sigma_max = pr.sigma_max;
        ScalarState sc = s.scalar_state();
        smp.energy = invariant_energy(lat, sc);
        smp.casimir = invariant_casimir(sc);
        rep.series.push_back(smp);
    };

    // t = 0: Phi = Omega = 0; d(0) = det_p(0) = 1 by convention of the limit
    ScanSample first;
    first.t = 0;
    first.det = 1.0;
    first.sigma_min = 0;
    first.sigma_max = 0;
    {
        ScalarState sc = st.scalar_state();
        first.energy = invariant_energy(lat, sc);
        first.casimir = invariant_casimir(sc);
    }
    rep.series.push_back(first);

    GeodesicStepper prev = st;  // snapshot at the previous scan sample
    double prev_det = 1.0;      // d(t) -> 1 as t -> 0+
    bool have_probe = true;

    auto refine = [&](GeodesicStepper left, double d_left, double width) {
        // bisection on the sign of d over [left.t(), left.t() + width]
        GeodesicStepper cur = left;
        double lo = 0, hi = width;
        double d_lo = d_left;
        Probe last{};
        for (int it = 0; it < opt.bisection_steps; ++it) {
            double mid = 0.5 * (lo + hi);
            GeodesicStepper trial = cur;  // anchored at lo
            trial.step_with(mid - lo);
            Probe pr = probe(trial.state(), opt.det_order);
            last = pr;
            if ((pr.det < 0) == (d_lo < 0)) {
                lo = mid;
                d_lo = pr.det;
                cur = trial;
            } else {
                hi = mid;
            }
        }
        ConjugateHit hit;
        hit.t = left.t() + 0.5 * (lo + hi);
        hit.det = last.det;
        hit.sigma_min = last.sigma_min;
        hit.witness = last.witness;
        rep.zeros.push_back(hit);
    };

    for (long long s = 1; s <= steps; ++s) {
        try {
            st.step();
        } catch (const std::runtime_error&) {
            rep.lambda_failed = true;
            rep.abort_time = st.t();
            return rep;
        }
        if (st.state().c.cwiseAbs().maxCoeff() > opt.blowup_guard) {
            rep.blew_up = true;
            rep.abort_time = st.t();
            return rep;
        }
        if (s % opt.scan_stride != 0 && s != steps) continue;

        Probe pr = probe(st.state(), opt.det_order);
        record(st, pr);
        if (lambda_condition(st.state().A) > opt.cond_limit) {
            rep.lambda_failed = true;
            rep.abort_time = st.t();
            return rep;
        }

        bool sign_change = have_probe && std::signbit(pr.det) != std::signbit(prev_det) &&
                           prev_det != 0.0;
        bool sigma_zero = pr.sigma_max > 0 && pr.sigma_min < opt.sigma_ratio * pr.sigma_max;
        if (sign_change) {
            refine(prev, prev_det, st.t() - prev.t());
        } else if (sigma_zero) {
            ConjugateHit hit;
            hit.t = st.t();
            hit.det = pr.det;
            hit.sigma_min = pr.sigma_min;
            hit.witness = pr.witness;
            rep.zeros.push_back(hit);
        }
        prev = st;
        prev_det = pr.det;
        have_probe = true;
    }
    return rep;
}

}  // namespace coad
