#pragma once

#include "coad/galerkin.hpp"

namespace coad {

struct ScanSample {
    double t = 0;
    double det = 0;        // det_p(Omega^{-1} Gamma) = det_p(Omega^{-1} Phi - Id)
    double sigma_min = 0;  // smallest singular value of Phi
    double sigma_max = 0;
    double energy = 0;
    double casimir = 0;
};

struct ConjugateHit {
    double t = 0;
    double det = 0;
    double sigma_min = 0;
    Eigen::VectorXcd witness;  // near-null right singular vector of Phi
};

struct ScanReport {
    int N = 0;
    double r = 0;
    double t_max = 0;
    double dt = 0;
    int det_order = 3;
    std::vector<ScanSample> series;
    std::vector<ConjugateHit> zeros;
    bool lambda_failed = false;
    bool blew_up = false;
    double abort_time = 0;
};

struct ScanOptions {
    double t_max = 1.0;
    double dt = 1e-2;
    int scan_stride = 5;       // samples every scan_stride steps
    int det_order = 3;         // p for the regularized determinant
    double sigma_ratio = 1e-8; // zero when sigma_min < ratio * sigma_max
    double blowup_guard = 1e6;
    double cond_limit = 1e12;
    int bisection_steps = 10;  // refines t* to scan_step * 2^-bisection_steps
};

// Tracks d(t) = det_p(Omega^{-1} Phi - Id) and sigma_min(Phi) along the
// trajectory; reports sign changes and sigma collapses, refining each
// crossing by bisection from the preceding snapshot.
ScanReport conjugate_scan(const WaveLattice& lat, const ScalarState& u0, const ScanOptions& opt);

}  // namespace coad
