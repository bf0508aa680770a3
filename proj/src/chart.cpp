#include "coad/chart.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace coad {

namespace {

using Cplx = std::complex<double>;

// dense coefficient grid over [-M..M]^2 including the zero mode
struct ModeGrid {
    int M;
    int W;  // 2M+1
    std::vector<Cplx> a;

    explicit ModeGrid(int M_) : M(M_), W(2 * M_ + 1), a(std::size_t(W) * W, Cplx(0, 0)) {}
    Cplx& at(int kx, int ky) { return a[std::size_t(kx + M) * W + (ky + M)]; }
    const Cplx& at(int kx, int ky) const { return a[std::size_t(kx + M) * W + (ky + M)]; }
};

// truncated product: out_k = sum_{p+q=k, |p|,|q|,|k| <= M} f_p g_q
ModeGrid convolve(const ModeGrid& f, const ModeGrid& g) {
    ModeGrid out(f.M);
    const int M = f.M;
    for (int px = -M; px <= M; ++px) {
        for (int py = -M; py <= M; ++py) {
            Cplx fv = f.at(px, py);
            if (fv == Cplx(0, 0)) continue;
            int qx_lo = std::max(-M, -M - px), qx_hi = std::min(M, M - px);
            for (int qx = qx_lo; qx <= qx_hi; ++qx) {
                for (int qy = std::max(-M, -M - py); qy <= std::min(M, M - py); ++qy) {
                    Cplx gv = g.at(qx, qy);
                    if (gv == Cplx(0, 0)) continue;
                    out.at(px + qx, py + qy) += fv * gv;
                }
            }
        }
    }
    return out;
}

void symmetrize(ModeGrid& f) {
    const int M = f.M;
    for (int kx = -M; kx <= M; ++kx)
        for (int ky = (kx > 0 ? -M : 0); ky <= M; ++ky) {
            Cplx avg = 0.5 * (f.at(kx, ky) + std::conj(f.at(-kx, -ky)));
            f.at(kx, ky) = avg;
            f.at(-kx, -ky) = std::conj(avg);
        }
}

double sup_abs(const ModeGrid& f) {
    double m = 0;
    for (const auto& v : f.a) m = std::max(m, std::abs(v));
    return m;
}

// real part of the field on a grid x_i = 2 pi i / G, separable contraction
std::vector<double> evaluate_grid(const ModeGrid& f, int G) {
    const int M = f.M, W = f.W;
    std::vector<Cplx> phase(std::size_t(W) * G);
    for (int k = -M; k <= M; ++k)
        for (int g = 0; g < G; ++g)
            phase[std::size_t(k + M) * G + g] = std::polar(1.0, 2.0 * M_PI * k * g / G);
    std::vector<Cplx> partial(std::size_t(W) * G, Cplx(0, 0));  // over (kx, gy)
    for (int kx = -M; kx <= M; ++kx)
        for (int ky = -M; ky <= M; ++ky) {
            Cplx c = f.at(kx, ky);
            if (c == Cplx(0, 0)) continue;
            const Cplx* ph = &phase[std::size_t(ky + M) * G];
            Cplx* row = &partial[std::size_t(kx + M) * G];
            for (int g = 0; g < G; ++g) row[g] += c * ph[g];
        }
    std::vector<double> out(std::size_t(G) * G, 0.0);
    for (int kx = -M; kx <= M; ++kx) {
        const Cplx* ph = &phase[std::size_t(kx + M) * G];
        const Cplx* row = &partial[std::size_t(kx + M) * G];
        for (int gx = 0; gx < G; ++gx) {
            Cplx px = ph[gx];
            for (int gy = 0; gy < G; ++gy) out[std::size_t(gx) * G + gy] += (px * row[gy]).real();
        }
    }
    return out;
}

// jacobian components of v = grad^perp psi on the enlarged grid:
// (Dv)_ab = -kperp_a k_b psi_k with kperp = (-ky, kx)
void dv_components(const WaveLattice& lat, const ScalarState& v, ModeGrid dv[2][2]) {
    for (int i = 0; i < lat.size(); ++i) {
        int kx = lat.mode(i).x(), ky = lat.mode(i).y();
        Cplx psi = v.coef[i] * std::pow(lat.abs_k(i), v.beta - 2.0);
        double kperp[2] = {double(-ky), double(kx)};
        double kk[2] = {double(kx), double(ky)};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) dv[a][b].at(kx, ky) += -kperp[a] * kk[b] * psi;
    }
}

}  // namespace

double chart_residual(const WaveLattice& lat, const ScalarState& v, int bandwidth,
                      const Eigen::VectorXcd& phi, int grid) {
    const int M = bandwidth;
    ModeGrid B[2][2] = {{ModeGrid(M), ModeGrid(M)}, {ModeGrid(M), ModeGrid(M)}};
    dv_components(lat, v, B);
    int W = 2 * M + 1;
    for (int kx = -M; kx <= M; ++kx)
        for (int ky = -M; ky <= M; ++ky) {
            if (kx == 0 && ky == 0) continue;
            Cplx p = phi[std::size_t(kx + M) * W + (ky + M)];
            double kk[2] = {double(kx), double(ky)};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) B[a][b].at(kx, ky) += -kk[a] * kk[b] * p;
        }
    std::vector<double> g11 = evaluate_grid(B[0][0], grid);
    std::vector<double> g12 = evaluate_grid(B[0][1], grid);
    std::vector<double> g21 = evaluate_grid(B[1][0], grid);
    std::vector<double> g22 = evaluate_grid(B[1][1], grid);
    double worst = 0;
    for (std::size_t i = 0; i < g11.size(); ++i) {
        double det = (1.0 + g11[i]) * (1.0 + g22[i]) - g12[i] * g21[i];
        worst = std::max(worst, std::abs(det - 1.0));
    }
    return worst;
}

ChartSolution chart_solve(const WaveLattice& lat, const ScalarState& v, const ChartOptions& opt) {
    const int M = opt.bandwidth > 0 ? opt.bandwidth : std::min(3 * lat.N(), 40);
    if (M < lat.N()) throw std::invalid_argument("chart bandwidth below data bandwidth");
    const int W = 2 * M + 1;

    ModeGrid dv[2][2] = {{ModeGrid(M), ModeGrid(M)}, {ModeGrid(M), ModeGrid(M)}};
    dv_components(lat, v, dv);
    double vscale = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) vscale = std::max(vscale, sup_abs(dv[a][b]));

    ModeGrid phi(M);
    double prev_update = std::numeric_limits<double>::infinity();
    int grow_streak = 0;
    ChartSolution sol;
    sol.bandwidth = M;

    for (int it = 1; it <= opt.max_iterations; ++it) {
        ModeGrid B[2][2] = {{dv[0][0], dv[0][1]}, {dv[1][0], dv[1][1]}};
        for (int kx = -M; kx <= M; ++kx)
            for (int ky = -M; ky <= M; ++ky) {
                Cplx p = phi.at(kx, ky);
                if (p == Cplx(0, 0)) continue;
                double kk[2] = {double(kx), double(ky)};
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) B[a][b].at(kx, ky) += -kk[a] * kk[b] * p;
            }
        ModeGrid det = convolve(B[0][0], B[1][1]);
        ModeGrid cross = convolve(B[0][1], B[1][0]);
        for (std::size_t i = 0; i < det.a.size(); ++i) det.a[i] -= cross.a[i];
        symmetrize(det);
        sol.dropped_mean = std::abs(det.at(0, 0));

        ModeGrid next(M);
        double update = 0;
        for (int kx = -M; kx <= M; ++kx)
            for (int ky = -M; ky <= M; ++ky) {
                if (kx == 0 && ky == 0) continue;
                double k2 = double(kx) * kx + double(ky) * ky;
                next.at(kx, ky) = det.at(kx, ky) / k2;
                update = std::max(update, std::abs(next.at(kx, ky) - phi.at(kx, ky)));
            }
        phi = std::move(next);
        sol.iterations = it;

        double phisup = sup_abs(phi);
        if (!std::isfinite(phisup) || phisup > 1e3 * (1.0 + vscale))
            throw ChartNonContraction("chart iteration diverged: |v| too large");
        if (update > prev_update * 1.0001) {
            if (++grow_streak >= 3)
                throw ChartNonContraction("chart iteration not contracting: |v| too large");
        } else {
            grow_streak = 0;
        }
        prev_update = update;

        if (update <= 1e-16 + 1e-13 * std::max(1.0, phisup)) break;
        if (it == opt.max_iterations)
            throw ChartNonContraction("chart iteration exceeded max iterations");
    }

    sol.phi = Eigen::VectorXcd::Zero(std::size_t(W) * W);
    for (int kx = -M; kx <= M; ++kx)
        for (int ky = -M; ky <= M; ++ky)
            sol.phi[std::size_t(kx + M) * W + (ky + M)] = phi.at(kx, ky);
    sol.residual = chart_residual(lat, v, M, sol.phi, opt.grid);
    return sol;
}

}  // namespace coad
