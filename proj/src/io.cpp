#include "coad/io.hpp"

#include <fstream>
#include <sstream>

namespace coad {

namespace {

Json poly_json(const Poly4& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back(Json::array({m.exp(0), m.exp(1), m.exp(2), m.exp(3),
                                     to_string(c.re), to_string(c.im)}));
    }
    return terms;
}

Poly4 poly_from_json(const Json& j) {
    Poly4 p;
    for (const auto& t : j) {
        Monomial4 m(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>());
        GaussianRational c(rational_from_string(t[4].get<std::string>()),
                           rational_from_string(t[5].get<std::string>()));
        p.add_term(m, c);
    }
    return p;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

InitialData initial_data_from_json(const Json& j) {
    InitialData d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "euler") {
        d.kind = ScalarKind::Euler;
        d.beta = 0.0;
    } else if (kind == "gsqg") {
        d.kind = ScalarKind::GSqg;
        d.beta = j.at("beta").get<double>();
        if (d.beta < 0.0 || d.beta > 1.0)
            throw std::invalid_argument("beta must lie in [0, 1]");
    } else {
        throw std::invalid_argument("kind must be euler or gsqg");
    }
    d.N = j.at("N").get<int>();
    if (d.N < 1) throw std::invalid_argument("N >= 1 required");
    for (const auto& m : j.at("modes")) {
        int a = m.at("k")[0].get<int>();
        int b = m.at("k")[1].get<int>();
        double re = m.value("re", 0.0);
        double im = m.value("im", 0.0);
        d.modes.emplace_back(a, b, std::complex<double>(re, im));
    }
    return d;
}

InitialData read_initial_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open initial-data file: " + path);
    Json j = Json::parse(in);
    return initial_data_from_json(j);
}

ScalarState make_state(const WaveLattice& lat, const InitialData& data) {
    ScalarState s;
    s.kind = data.kind;
    s.beta = data.beta;
    s.coef = Eigen::VectorXcd::Zero(lat.size());
    std::vector<bool> given(lat.size(), false);
    for (const auto& [a, b, z] : data.modes) {
        int i = lat.index(a, b);
        if (i < 0) throw std::invalid_argument("mode outside lattice or zero: (" +
                                               std::to_string(a) + "," + std::to_string(b) + ")");
        s.coef[i] += z;
        given[i] = true;
    }
    for (int i = 0; i < lat.size(); ++i) {
        int ineg = lat.negation(i);
        if (given[i] && !given[ineg]) {
            s.coef[ineg] = std::conj(s.coef[i]);
            given[ineg] = true;
        }
    }
    if (!s.conjugate_symmetric(lat, 1e-12))
        throw std::invalid_argument("initial data is not conjugate-symmetric");
    return s;
}

Json grading_json(const std::vector<BasisElement>& grading) {
    Json arr = Json::array();
    for (const auto& el : grading) {
        arr.push_back(Json{{"family", std::string(1, el.family)},
                           {"k", el.k},
                           {"m", el.m},
                           {"j", el.j},
                           {"curl_eig", el.curl_eig},
                           {"bracket_eig", Json::array({0, el.bracket_eig_im})},
                           {"components", Json::array({poly_json(el.field.f1),
                                                       poly_json(el.field.f2),
                                                       poly_json(el.field.f3)})}});
    }
    return arr;
}

std::vector<BasisElement> grading_from_json(const Json& j) {
    std::vector<BasisElement> out;
    for (const auto& e : j) {
        BasisElement el;
        el.family = e.at("family").get<std::string>().at(0);
        el.k = e.at("k").get<int>();
        el.m = e.at("m").get<int>();
        el.j = e.at("j").get<int>();
        el.curl_eig = e.at("curl_eig").get<int>();
        el.bracket_eig_im = e.at("bracket_eig")[1].get<int>();
        el.field = FrameField(poly_from_json(e.at("components")[0]),
                              poly_from_json(e.at("components")[1]),
                              poly_from_json(e.at("components")[2]));
        out.push_back(std::move(el));
    }
    return out;
}

Json grading_report_json(const GradingReport& rep) {
    Json counts = Json::array();
    for (const auto& c : rep.counts)
        counts.push_back(Json{{"family", std::string(1, c.family)}, {"m", c.m}, {"count", c.count}});
    return Json{{"k", rep.k},          {"counts", counts},
                {"total", rep.total},  {"rank", rep.rank},
                {"counts_ok", rep.counts_ok}, {"rank_ok", rep.rank_ok},
                {"identities_ok", rep.identities_ok},
                {"first_failure", rep.first_failure}};
}

std::string catalog_csv(const SpectralCatalog& cat) {
    std::ostringstream os;
    os << "geometry,family,k_or_l,m,re,im,multiplicity\n";
    for (const auto& e : cat.entries) {
        auto v = e.value();
        os << geometry_name(cat.geometry) << "," << e.family << "," << e.k_or_l << "," << e.m
           << "," << fmt(v.real()) << "," << fmt(v.imag()) << "," << e.multiplicity << "\n";
    }
    return os.str();
}

namespace {
std::string verdict_name(SchattenVerdict v) {
    switch (v) {
        case SchattenVerdict::Converges: return "converges";
        case SchattenVerdict::Diverges: return "diverges";
        default: return "undetermined";
    }
}
Json finite_or_string(double v) {
    if (std::isinf(v)) return Json(v > 0 ? "inf" : "-inf");
    return Json(v);
}
}  // namespace

Json schatten_json(const SchattenReport& rep) {
    return Json{{"p", rep.p},
                {"r", rep.r},
                {"cutoff", rep.cutoff},
                {"partial_sum", rep.partial_sum},
                {"tail_lower", finite_or_string(rep.tail_lower)},
                {"tail_upper", finite_or_string(rep.tail_upper)},
                {"exponent", rep.exponent},
                {"threshold", finite_or_string(rep.threshold)},
                {"log_coefficient", rep.log_coefficient},
                {"verdict", verdict_name(rep.verdict)}};
}

Json noncompactness_json(const NonCompactnessReport& rep) {
    Json curve = Json::array();
    for (const auto& [eps, rho] : rep.density_curve) curve.push_back(Json::array({eps, rho}));
    return Json{{"geometry", geometry_name(rep.geometry)},
                {"r", rep.r},
                {"essential_radius", finite_or_string(rep.essential_radius)},
                {"hausdorff_measure", finite_or_string(rep.hausdorff_measure)},
                {"density_curve", curve}};
}

Json density_json(const DensityResult& res) {
    return Json{{"l", res.l},
                {"eps", res.eps},
                {"finite_density", res.finite_density},
                {"limit", res.limit}};
}

Json trajectory_json(const GeodesicTrajectory& traj) {
    Json samples = Json::array();
    for (const auto& s : traj.samples) {
        samples.push_back(Json{{"t", s.t},
                               {"energy", s.energy},
                               {"enstrophy", s.casimir},
                               {"lambda_cond", s.lambda_cond}});
    }
    return Json{{"kind", traj.kind == ScalarKind::Euler ? "euler" : "gsqg"},
                {"beta", traj.beta},
                {"r", traj.r},
                {"dt", traj.dt},
                {"blew_up", traj.blew_up},
                {"lambda_failed", traj.lambda_failed},
                {"abort_time", traj.abort_time},
                {"samples", samples}};
}

std::string trajectory_csv(const GeodesicTrajectory& traj) {
    std::ostringstream os;
    os << "t,energy,enstrophy,lambda_cond\n";
    for (const auto& s : traj.samples)
        os << fmt(s.t) << "," << fmt(s.energy) << "," << fmt(s.casimir) << ","
           << fmt(s.lambda_cond) << "\n";
    return os.str();
}

Json scan_json(const ScanReport& rep) {
    Json zeros = Json::array();
    for (const auto& z : rep.zeros)
        zeros.push_back(Json{{"t", z.t}, {"sigma_min", z.sigma_min}, {"det", z.det}});
    return Json{{"resolution", rep.N},
                {"r", rep.r},
                {"t_max", rep.t_max},
                {"dt", rep.dt},
                {"det_order", rep.det_order},
                {"zeros", zeros},
                {"lambda_failed", rep.lambda_failed},
                {"blew_up", rep.blew_up},
                {"abort_time", rep.abort_time}};
}

std::string scan_csv(const ScanReport& rep) {
    std::ostringstream os;
    os << "t,energy,enstrophy,det,sigma_min\n";
    for (const auto& s : rep.series)
        os << fmt(s.t) << "," << fmt(s.energy) << "," << fmt(s.casimir) << "," << fmt(s.det)
           << "," << fmt(s.sigma_min) << "\n";
    return os.str();
}

Json chart_json(const ChartSolution& sol) {
    Json phi = Json::array();
    const int W = 2 * sol.bandwidth + 1;
    for (int kx = -sol.bandwidth; kx <= sol.bandwidth; ++kx)
        for (int ky = -sol.bandwidth; ky <= sol.bandwidth; ++ky) {
            const auto& z = sol.phi[std::size_t(kx + sol.bandwidth) * W + (ky + sol.bandwidth)];
            if (z != std::complex<double>(0, 0))
                phi.push_back(Json{{"k", Json::array({kx, ky})}, {"re", z.real()}, {"im", z.imag()}});
        }
    return Json{{"bandwidth", sol.bandwidth},
                {"residual", sol.residual},
                {"iterations", sol.iterations},
                {"dropped_mean", sol.dropped_mean},
                {"phi", phi}};
}

Json with_config(Json config, Json payload) {
    Json out;
    out["config"] = std::move(config);
    out["result"] = std::move(payload);
    return out;
}

std::string csv_with_config(const Json& config, const std::string& body) {
    return "# config: " + config.dump() + "\n" + body;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

}  // namespace coad
