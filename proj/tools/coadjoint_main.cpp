#include <CLI11.hpp>

#include <iostream>

#include "coad/io.hpp"

namespace {

using coad::Json;

void emit(const Json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        coad::write_text_file(out_path, text);
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        coad::write_text_file(out_path, text);
}

int fail(int code, const std::string& msg) {
    Json err{{"error", msg}, {"exit", code}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral data of the coadjoint operator K_r(u0) and conjugate-point scans"};
    app.require_subcommand(1);
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "seed echoed into artifacts for randomized inputs");

    // basis
    auto* basis = app.add_subcommand("basis", "curl-eigenfield basis grading on S^3");
    int basis_k = 0;
    bool basis_verify = false, basis_axi = false;
    std::string basis_out;
    basis->add_option("--k", basis_k, "grading index")->required();
    basis->add_flag("--verify", basis_verify, "run the full exact verification");
    basis->add_flag("--axisymmetric", basis_axi, "restrict to elements commuting with e1");
    basis->add_option("--out", basis_out, "output JSON path");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "closed-form eigenvalue catalog of K_r(u0)");
    std::string spec_geom, spec_out;
    double spec_r = 0;
    int spec_cutoff = 0;
    spectrum->add_option("--geometry", spec_geom, "s2 | s3")->required();
    spectrum->add_option("--r", spec_r, "metric order")->required();
    spectrum->add_option("--cutoff", spec_cutoff, "l_max or k_max")->required();
    spectrum->add_option("--out", spec_out, "output CSV path");

    // schatten
    auto* schatten = app.add_subcommand("schatten", "Schatten partial sums and verdict");
    std::string sch_geom, sch_out;
    double sch_r = 0, sch_p = 0;
    int sch_cutoff = 0;
    schatten->add_option("--geometry", sch_geom, "s2 | s3")->required();
    schatten->add_option("--r", sch_r, "metric order")->required();
    schatten->add_option("--p", sch_p, "Schatten exponent")->required();
    schatten->add_option("--cutoff", sch_cutoff, "l_max or k_max")->required();
    schatten->add_option("--out", sch_out, "output JSON path");

    // threshold
    auto* threshold = app.add_subcommand("threshold", "critical Schatten exponent p*");
    int th_dim = 0;
    double th_r = 0;
    std::string th_out;
    threshold->add_option("--dim", th_dim, "2 or 3")->required();
    threshold->add_option("--r", th_r, "metric order")->required();
    threshold->add_option("--out", th_out, "optional JSON path");

    // noncompact
    auto* noncompact = app.add_subcommand("noncompact", "measures of non-compactness");
    std::string nc_geom, nc_out;
    double nc_r = std::numeric_limits<double>::quiet_NaN();
    int nc_cutoff = 100;
    noncompact->add_option("--geometry", nc_geom, "s2 | s3 | sqg | hopf")->required();
    noncompact->add_option("--r", nc_r, "metric order (implied by sqg/hopf)");
    noncompact->add_option("--cutoff", nc_cutoff, "catalog cutoff echoed in the artifact");
    noncompact->add_option("--out", nc_out, "output JSON path");

    // density
    auto* density = app.add_subcommand("density", "non-decaying eigenvalue density (SQG)");
    long long de_l = 0;
    double de_eps = 0;
    std::string de_out;
    density->add_option("--l", de_l, "spherical harmonic level")->required();
    density->add_option("--eps", de_eps, "threshold in (0, sqrt 2)")->required();
    density->add_option("--out", de_out, "output JSON path");

    // geodesic
    auto* geodesic = app.add_subcommand("geodesic", "truncated Euler/gSQG geodesic with transport");
    std::string geo_init, geo_json, geo_csv;
    double geo_tmax = 1.0, geo_dt = 1e-2, geo_r = 0.0;
    int geo_N = 0, geo_stride = 1;
    bool geo_no_ops = false;
    geodesic->add_option("--init", geo_init, "initial-data JSON file")->required();
    geodesic->add_option("--tmax", geo_tmax, "final time")->required();
    geodesic->add_option("--dt", geo_dt, "time step")->required();
    geodesic->add_option("--N", geo_N, "lattice radius")->required();
    geodesic->add_option("--r", geo_r, "metric order");
    geodesic->add_option("--stride", geo_stride, "sample stride");
    geodesic->add_flag("--state-only", geo_no_ops, "skip transport and Jacobi operators");
    geodesic->add_option("--out-json", geo_json, "diagnostics JSON path");
    geodesic->add_option("--out-csv", geo_csv, "time-series CSV path");

    // conjugate-scan
    auto* scan = app.add_subcommand("conjugate-scan", "determinant scan for conjugate times");
    std::string scan_init, scan_json_path, scan_csv_path;
    double scan_tmax = 1.0, scan_dt = 1e-2, scan_r = 0.0;
    int scan_N = 0, scan_stride = 5, scan_p = 3;
    scan->add_option("--init", scan_init, "initial-data JSON file")->required();
    scan->add_option("--tmax", scan_tmax, "final time")->required();
    scan->add_option("--N", scan_N, "lattice radius")->required();
    scan->add_option("--r", scan_r, "metric order");
    scan->add_option("--dt", scan_dt, "time step");
    scan->add_option("--stride", scan_stride, "scan sample stride");
    scan->add_option("--p", scan_p, "regularized determinant order");
    scan->add_option("--out-json", scan_json_path, "scan report JSON path");
    scan->add_option("--out-csv", scan_csv_path, "time-series CSV path");

    // chart
    auto* chart = app.add_subcommand("chart", "analytic chart potential via contraction");
    std::string chart_init, chart_out;
    double chart_tol = 1e-10;
    int chart_band = 0, chart_grid = 64;
    chart->add_option("--init", chart_init, "initial-data JSON file")->required();
    chart->add_option("--tol", chart_tol, "grid residual target")->required();
    chart->add_option("--bandwidth", chart_band, "potential bandwidth (default 3N, max 40)");
    chart->add_option("--grid", chart_grid, "residual sampling grid");
    chart->add_option("--out", chart_out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return fail(2, std::string("argument error: ") + e.what());
    }

    try {
        if (*basis) {
            Json config{{"command", "basis"}, {"k", basis_k},      {"verify", basis_verify},
                        {"axisymmetric", basis_axi}, {"seed", seed}};
            auto grading =
                basis_axi ? coad::axisymmetric_filter(basis_k) : coad::build_grading(basis_k);
            Json payload{{"elements", coad::grading_json(grading)}};
            if (basis_verify) {
                coad::GradingReport rep = coad::verify_grading(basis_k);
                payload["report"] = coad::grading_report_json(rep);
                if (!rep.ok()) {
                    emit(coad::with_config(config, payload), basis_out);
                    return fail(3, "grading verification failed: " + rep.first_failure);
                }
            }
            emit(coad::with_config(config, payload), basis_out);
            return 0;
        }

        if (*spectrum) {
            Json config{{"command", "spectrum"}, {"geometry", spec_geom}, {"r", spec_r},
                        {"cutoff", spec_cutoff},  {"seed", seed}};
            coad::SpectralCatalog cat = spec_geom == "s2" ? coad::catalog_s2(spec_r, spec_cutoff)
                                       : spec_geom == "s3"
                                           ? coad::catalog_s3(spec_r, spec_cutoff)
                                           : throw std::invalid_argument("geometry must be s2|s3");
            emit_text(coad::csv_with_config(config, coad::catalog_csv(cat)), spec_out);
            return 0;
        }

        if (*schatten) {
            Json config{{"command", "schatten"}, {"geometry", sch_geom}, {"r", sch_r},
                        {"p", sch_p},            {"cutoff", sch_cutoff}, {"seed", seed}};
            coad::SpectralCatalog cat = sch_geom == "s2" ? coad::catalog_s2(sch_r, sch_cutoff)
                                       : sch_geom == "s3"
                                           ? coad::catalog_s3(sch_r, sch_cutoff)
                                           : throw std::invalid_argument("geometry must be s2|s3");
            coad::SchattenReport rep = coad::schatten_report(cat, sch_p);
            emit(coad::with_config(config, coad::schatten_json(rep)), sch_out);
            return 0;
        }

        if (*threshold) {
            Json config{{"command", "threshold"}, {"dim", th_dim}, {"r", th_r}, {"seed", seed}};
            double sigma = 0;
            double p = coad::spectral_threshold(th_dim, th_r, &sigma);
            std::ostringstream os;
            os.precision(17);
            os << p;
            std::cout << os.str() << "\n";
            if (!th_out.empty())
                emit(coad::with_config(config, Json{{"p_star", p},
                                                    {"sigma", sigma},
                                                    {"zeta_rule", "sigma*p > dim/2"}}),
                     th_out);
            return 0;
        }

        if (*noncompact) {
            double r = nc_r;
            std::string geom = nc_geom;
            if (geom == "sqg") {
                geom = "s2";
                if (std::isnan(r)) r = -0.5;
            } else if (geom == "hopf") {
                geom = "s3";
                if (std::isnan(r)) r = 0.0;
            }
            if (std::isnan(r)) throw std::invalid_argument("--r required for geometry " + geom);
            Json config{{"command", "noncompact"}, {"geometry", nc_geom}, {"r", r},
                        {"cutoff", nc_cutoff},     {"seed", seed}};
            coad::SpectralCatalog cat = geom == "s2" ? coad::catalog_s2(r, nc_cutoff)
                                        : geom == "s3"
                                            ? coad::catalog_s3(r, nc_cutoff)
                                            : throw std::invalid_argument("geometry must be s2|s3|sqg|hopf");
            emit(coad::with_config(config, coad::noncompactness_json(coad::noncompactness(cat))),
                 nc_out);
            return 0;
        }

        if (*density) {
            Json config{{"command", "density"}, {"l", de_l}, {"eps", de_eps}, {"seed", seed}};
            coad::SpectralCatalog cat = coad::catalog_s2(-0.5, 1);
            coad::DensityResult res = coad::nondecay_density(cat, de_l, de_eps);
            emit(coad::with_config(config, coad::density_json(res)), de_out);
            return 0;
        }

        if (*geodesic) {
            Json config{{"command", "geodesic"}, {"init", geo_init}, {"tmax", geo_tmax},
                        {"dt", geo_dt},          {"N", geo_N},       {"r", geo_r},
                        {"stride", geo_stride},  {"seed", seed}};
            coad::InitialData data = coad::read_initial_data(geo_init);
            if (geo_N <= 0) geo_N = data.N;
            coad::WaveLattice lat(geo_N, geo_r);
            coad::ScalarState u0 = coad::make_state(lat, data);
            coad::IntegrateOptions opt;
            opt.t_max = geo_tmax;
            opt.dt = geo_dt;
            opt.sample_stride = geo_stride;
            opt.with_transport = !geo_no_ops;
            opt.with_jacobi = !geo_no_ops;
            coad::GeodesicTrajectory traj = coad::integrate_geodesic(lat, u0, opt);
            emit(coad::with_config(config, coad::trajectory_json(traj)), geo_json);
            if (!geo_csv.empty())
                coad::write_text_file(geo_csv,
                                      coad::csv_with_config(config, coad::trajectory_csv(traj)));
            if (traj.blew_up) return fail(3, "blow-up guard tripped at t=" + std::to_string(traj.abort_time));
            if (traj.lambda_failed)
                return fail(3, "Lambda ill-conditioned at t=" + std::to_string(traj.abort_time));
            return 0;
        }

        if (*scan) {
            Json config{{"command", "conjugate-scan"}, {"init", scan_init}, {"tmax", scan_tmax},
                        {"dt", scan_dt},  {"N", scan_N},  {"r", scan_r},
                        {"stride", scan_stride}, {"p", scan_p}, {"seed", seed}};
            coad::InitialData data = coad::read_initial_data(scan_init);
            if (scan_N <= 0) scan_N = data.N;
            coad::WaveLattice lat(scan_N, scan_r);
            coad::ScalarState u0 = coad::make_state(lat, data);
            coad::ScanOptions opt;
            opt.t_max = scan_tmax;
            opt.dt = scan_dt;
            opt.scan_stride = scan_stride;
            opt.det_order = scan_p;
            coad::ScanReport rep = coad::conjugate_scan(lat, u0, opt);
            emit(coad::with_config(config, coad::scan_json(rep)), scan_json_path);
            if (!scan_csv_path.empty())
                coad::write_text_file(scan_csv_path,
                                      coad::csv_with_config(config, coad::scan_csv(rep)));
            if (rep.blew_up) return fail(3, "blow-up guard tripped at t=" + std::to_string(rep.abort_time));
            if (rep.lambda_failed)
                return fail(3, "Lambda ill-conditioned at t=" + std::to_string(rep.abort_time));
            return 0;
        }

        if (*chart) {
            Json config{{"command", "chart"}, {"init", chart_init}, {"tol", chart_tol},
                        {"bandwidth", chart_band}, {"grid", chart_grid}, {"seed", seed}};
            coad::InitialData data = coad::read_initial_data(chart_init);
            coad::WaveLattice lat(data.N, 0.0);
            coad::ScalarState v = coad::make_state(lat, data);
            coad::ChartOptions opt;
            opt.tol = chart_tol;
            opt.bandwidth = chart_band;
            opt.grid = chart_grid;
            coad::ChartSolution sol = coad::chart_solve(lat, v, opt);
            emit(coad::with_config(config, coad::chart_json(sol)), chart_out);
            return 0;
        }
    } catch (const coad::ChartNonContraction& e) {
        return fail(3, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(2, e.what());
    } catch (const std::exception& e) {
        return fail(3, e.what());
    }
    return fail(2, "no subcommand");
}
