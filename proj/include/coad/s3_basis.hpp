#pragma once

#include <string>
#include <vector>

#include "coad/frame.hpp"

namespace coad {

// One curl eigenfield of the grading-k Schauder basis. Eigen-metadata is
// verified exactly at construction time:
//   curl_frame(field) == curl_eig * field
//   bracket_e1(field) == (i * bracket_eig_im) * field
//   divergence_frame(field) == 0
struct BasisElement {
    FrameField field;
    char family;         // 'E' or 'F'
    int k;               // grading, k >= 0
    int m;               // weight, 0 <= m <= k
    int j;               // polynomial index, 0 <= j <= k
    int curl_eig;        // k+2 for E, -k for F
    int bracket_eig_im;  // [v, e1] = i * bracket_eig_im * v; equals k - 2m for k >= 1
};

struct GradingCount {
    char family;
    int m;
    long long count;
};

struct GradingReport {
    int k = 0;
    std::vector<GradingCount> counts;
    long long total = 0;
    long long rank = 0;
    bool counts_ok = false;
    bool rank_ok = false;
    bool identities_ok = false;
    std::string first_failure;  // empty when everything verified

    bool ok() const { return counts_ok && rank_ok && identities_ok; }
};

// Coefficient polynomials Q_kj^m of z1^j z2^(k-j) in the expansion of
// (alpha z1 + beta z2)^m (-beta_bar z1 + alpha_bar z2)^(k-m).
// Returned list has length k+1, indexed by j.
std::vector<Poly4> build_Q(int k, int m);

// Multiplication of Q by the complex frame: v1 = Q e1, v2 = Q (e2 - i e3),
// v3 = Q (e2 + i e3).
FrameField v_field(const Poly4& q, int slot);

// Full grading k of the curl-eigenfield basis; every element is verified
// exactly before being returned. Throws std::runtime_error on any failed
// identity.
std::vector<BasisElement> build_grading(int k);

// Exact verification of grading k: eigen-relations (done in build_grading),
// cardinalities per (family, m), linear independence as full rank of the
// monomial coordinate matrix, and the two interior redundancy identities.
GradingReport verify_grading(int k);

// Elements commuting with e1 (bracket eigenvalue 0): {e1} for k = 0, empty
// for odd k, and the m = k/2 slices of both families for even k >= 2.
std::vector<BasisElement> axisymmetric_filter(int k);

// Rank over the monomial coordinates of the fields, certified by modular
// elimination (a full modular rank proves full rational rank).
long long coordinate_rank(const std::vector<BasisElement>& elems);

}  // namespace coad
