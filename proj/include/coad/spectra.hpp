#pragma once

#include <complex>
#include <string>
#include <vector>

#include "coad/s3_basis.hpp"

namespace coad {

enum class Geometry { S2Rotation, S3Hopf };

std::string geometry_name(Geometry g);

// One eigenvalue branch of K_r(u0), stored symbolically as i * q * (2/d)^e
// with integer q, d and real exponent e. The operator is skew self-adjoint,
// so the singular value of the branch is |value|.
struct EigenEntry {
    char family;    // 'Y' (sphere harmonics), 'E', 'F'
    int k_or_l;
    int m;
    long long q;    // integer factor; eigenvalue = i q (2/d)^e
    long long d;    // positive integer base denominator
    double expo;    // 1+r in 2D, 2r+1 in 3D
    long long multiplicity;

    std::complex<double> value() const;
    double abs_value() const;
};

struct SpectralCatalog {
    Geometry geometry;
    double r = 0.0;
    int cutoff = 0;  // l_max or k_max
    std::vector<EigenEntry> entries;

    long long total_multiplicity() const;
};

enum class SchattenVerdict { Converges, Diverges, Undetermined };

struct SchattenReport {
    double p = 0;
    double r = 0;
    int cutoff = 0;
    double partial_sum = 0;         // sum of mult * |lambda|^p over the catalog
    double tail_lower = 0;          // rigorous lower bound on the tail
    double tail_upper = 0;          // rigorous upper bound (inf when divergent)
    double exponent = 0;            // tail term decays like C / l^exponent
    double threshold = 0;           // p* for this geometry and r
    double log_coefficient = 0;     // c with partial sums ~ c log(cutoff), when exponent == 1
    SchattenVerdict verdict = SchattenVerdict::Undetermined;
};

struct NonCompactnessReport {
    Geometry geometry;
    double r = 0;
    double essential_radius = 0;  // sup of accumulation values of |eigenvalues|
    double hausdorff_measure = 0; // equals the essential radius for these catalogs
    std::vector<std::pair<double, double>> density_curve;  // (eps, rho(eps)) analytic limits
};

// Point spectrum of K_r on the round two-sphere for the equatorial rotation
// field: lambda_l^m = i m (2/(l(l+1)))^(1+r), multiplicity 1.
SpectralCatalog catalog_s2(double r, int l_max);

// Point spectrum of K_r on the round three-sphere for the Hopf field,
// with multiplicities from the curl-eigenfield basis cardinalities.
SpectralCatalog catalog_s3(double r, int k_max);

SchattenReport schatten_report(const SpectralCatalog& cat, double p);

// p* such that K_r is Schatten p-class exactly for p > p*. Also exposes the
// underlying zeta rule sigma * p > dim/2 through *sigma_out when requested.
double spectral_threshold(int dim, double r, double* sigma_out = nullptr);

NonCompactnessReport noncompactness(const SpectralCatalog& cat);

struct DensityResult {
    long long l = 0;
    double eps = 0;
    double finite_density = 0;  // brute count over the 2l+1 eigenvalues at level l
    double limit = 0;           // 1 - eps/sqrt(2)
};

// Density of non-decaying eigenvalues for the standard SQG catalog (r = -1/2).
DensityResult nondecay_density(const SpectralCatalog& cat, long long l, double eps);

// Exact symbolic application of K_0(e1) = 2 curl^{-1}[.,e1] to a verified
// basis element: returns the eigenvalue 2 b / curl_eig as an exact Gaussian
// rational (b is the bracket eigenvalue).
GaussianRational hopf_k0_eigenvalue(const BasisElement& el);

}  // namespace coad
