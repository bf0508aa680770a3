#pragma once

#include <json.hpp>

#include "coad/chart.hpp"
#include "coad/galerkin.hpp"
#include "coad/s3_basis.hpp"
#include "coad/scan.hpp"
#include "coad/spectra.hpp"

namespace coad {

using Json = nlohmann::json;

// Initial-data file: {kind: euler|gsqg, beta, N, modes: [{k:[a,b], re, im}]}
struct InitialData {
    ScalarKind kind = ScalarKind::Euler;
    double beta = 0.0;
    int N = 0;
    std::vector<std::tuple<int, int, std::complex<double>>> modes;
};

InitialData read_initial_data(const std::string& path);
InitialData initial_data_from_json(const Json& j);

// Builds the truncated state; missing negated modes are filled by conjugation,
// inconsistent ones are a validation error.
ScalarState make_state(const WaveLattice& lat, const InitialData& data);

Json grading_json(const std::vector<BasisElement>& grading);
std::vector<BasisElement> grading_from_json(const Json& j);
Json grading_report_json(const GradingReport& rep);

std::string catalog_csv(const SpectralCatalog& cat);
Json schatten_json(const SchattenReport& rep);
Json noncompactness_json(const NonCompactnessReport& rep);
Json density_json(const DensityResult& res);

Json trajectory_json(const GeodesicTrajectory& traj);
std::string trajectory_csv(const GeodesicTrajectory& traj);

Json scan_json(const ScanReport& rep);
std::string scan_csv(const ScanReport& rep);

Json chart_json(const ChartSolution& sol);

// Artifact envelope: the run configuration is echoed into every artifact.
Json with_config(Json config, Json payload);
std::string csv_with_config(const Json& config, const std::string& body);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace coad
