#include "coad/s3_basis.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace coad {

namespace {

Rational binom(int n, int r) {
    Rational out(1);
    for (int i = 0; i < r; ++i) out = out * Rational(n - i) / Rational(i + 1);
    return out;
}

Poly4 poly_pow(const Poly4& p, int e) {
    Poly4 out = Poly4::constant(GaussianRational(1));
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

void check_eigen(const BasisElement& el) {
    FrameField lhs = curl_frame(el.field) - GaussianRational(el.curl_eig) * el.field;
    if (!lhs.is_zero())
        throw std::runtime_error("curl identity failed at k=" + std::to_string(el.k) +
                                 " m=" + std::to_string(el.m) + " j=" + std::to_string(el.j) +
                                 " family=" + el.family + "; residual f1=" +
                                 sphere_normal_form(lhs.f1).str());
    FrameField br = bracket_e1(el.field) - GaussianRational::i_times(el.bracket_eig_im) * el.field;
    if (!br.is_zero())
        throw std::runtime_error("bracket identity failed at k=" + std::to_string(el.k) +
                                 " m=" + std::to_string(el.m) + " j=" + std::to_string(el.j));
    if (!divergence_frame(el.field).is_zero())
        throw std::runtime_error("divergence nonzero at k=" + std::to_string(el.k) +
                                 " m=" + std::to_string(el.m) + " j=" + std::to_string(el.j));
}

}  // namespace

std::vector<Poly4> build_Q(int k, int m) {
    if (k < 0 || m < 0 || m > k) throw std::invalid_argument("build_Q: need 0 <= m <= k");
    Poly4 a = Poly4::alpha(), ab = Poly4::alpha_bar(), b = Poly4::beta(), bb = Poly4::beta_bar();
    std::vector<Poly4> q(k + 1);
    for (int s = 0; s <= m; ++s) {
        for (int t = 0; t <= k - m; ++t) {
            // (alpha z1)^s (beta z2)^(m-s) * (-beta_bar z1)^t (alpha_bar z2)^(k-m-t)
            int j = s + t;
            GaussianRational coef(binom(m, s) * binom(k - m, t) * ((t % 2) ? Rational(-1) : Rational(1)));
            q[j] += coef * (poly_pow(a, s) * poly_pow(b, m - s) * poly_pow(bb, t) *
                            poly_pow(ab, k - m - t));
        }
    }
    return q;
}

FrameField v_field(const Poly4& q, int slot) {
    switch (slot) {
        case 1:
            return {q, Poly4(), Poly4()};
        case 2:
            return {Poly4(), q, -GaussianRational::unit_i() * q};
        case 3:
            return {Poly4(), q, GaussianRational::unit_i() * q};
        default:
            throw std::invalid_argument("v_field slot must be 1..3");
    }
}

std::vector<BasisElement> build_grading(int k) {
    if (k < 0) throw std::invalid_argument("grading k must be >= 0");
    std::vector<BasisElement> out;

    if (k == 0) {
        Poly4 one = Poly4::constant(GaussianRational(1));
        BasisElement e1{v_field(one, 1), 'E', 0, 0, 0, 2, 0};
        BasisElement e2{v_field(one, 2), 'E', 0, 0, 0, 2, 2};
        BasisElement e3{v_field(one, 3), 'E', 0, 0, 0, 2, -2};
        for (auto* el : {&e1, &e2, &e3}) check_eigen(*el);
        out = {e1, e2, e3};
        return out;
    }

    // Q polynomials for all weights of this grading
    std::vector<std::vector<Poly4>> q(k + 1);
    for (int m = 0; m <= k; ++m) q[m] = build_Q(k, m);

    for (int m = 0; m <= k; ++m) {
        for (int j = 0; j <= k; ++j) {
            int beig = k - 2 * m;
            if (m == 0) {
                out.push_back({curl_frame(v_field(q[0][j], 1)), 'E', k, 0, j, k + 2, beig});
                out.push_back({curl_frame(v_field(q[0][j], 2)), 'E', k, 0, j, k + 2, beig});
            } else if (m == k) {
                out.push_back({curl_frame(v_field(q[k][j], 1)), 'E', k, k, j, k + 2, beig});
                out.push_back({curl_frame(v_field(q[k][j], 3)), 'E', k, k, j, k + 2, beig});
            } else {
                FrameField c1 = curl_frame(v_field(q[m][j], 1));
                FrameField c2 = curl_frame(c1);
                out.push_back(
                    {GaussianRational(k) * c1 + c2, 'E', k, m, j, k + 2, beig});
                out.push_back(
                    {GaussianRational(k + 2) * c1 - c2, 'F', k, m, j, -k, beig});
            }
        }
    }
    for (const auto& el : out) check_eigen(el);
    return out;
}

namespace {

// Modular arithmetic over p = 119 * 2^23 + 1 (p = 1 mod 4, so -1 is a square).
constexpr std::uint64_t kPrime = 998244353;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t mod_of(const Rational& r) {
    BigInt num = numerator(r) % BigInt(kPrime);
    BigInt den = denominator(r) % BigInt(kPrime);
    if (den == 0) throw std::runtime_error("denominator divisible by modulus");
    std::uint64_t n = std::uint64_t(num < 0 ? num + BigInt(kPrime) : num);
    std::uint64_t d = std::uint64_t(den);
    return n * mod_inv(d) % kPrime;
}

long long modular_rank(std::vector<std::vector<std::uint64_t>>& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        std::uint64_t inv = mod_inv(rows[row][col]);
        for (std::size_t c = col; c < ncols; ++c) rows[row][c] = rows[row][c] * inv % kPrime;
        for (std::size_t rr = row + 1; rr < rows.size(); ++rr) {
            std::uint64_t f = rows[rr][col];
            if (!f) continue;
            for (std::size_t c = col; c < ncols; ++c)
                rows[rr][c] = (rows[rr][c] + (kPrime - f) * rows[row][c]) % kPrime;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

long long coordinate_rank(const std::vector<BasisElement>& elems) {
    // omega^2 = -1 mod p; 3 is a primitive root of kPrime
    const std::uint64_t omega = mod_pow(3, (kPrime - 1) / 4);

    std::map<std::pair<int, std::uint32_t>, std::size_t> colidx;
    for (const auto& el : elems) {
        const Poly4* comps[3] = {&el.field.f1, &el.field.f2, &el.field.f3};
        for (int c = 0; c < 3; ++c)
            for (const auto& [mono, coef] : comps[c]->terms())
                colidx.emplace(std::make_pair(c, mono.key), colidx.size());
    }
    std::vector<std::vector<std::uint64_t>> rows(
        elems.size(), std::vector<std::uint64_t>(colidx.size(), 0));
    for (std::size_t rix = 0; rix < elems.size(); ++rix) {
        const auto& el = elems[rix];
        const Poly4* comps[3] = {&el.field.f1, &el.field.f2, &el.field.f3};
        for (int c = 0; c < 3; ++c)
            for (const auto& [mono, coef] : comps[c]->terms()) {
                std::size_t cix = colidx.at({c, mono.key});
                rows[rix][cix] = (mod_of(coef.re) + omega * mod_of(coef.im)) % kPrime;
            }
    }
    return modular_rank(rows);
}

GradingReport verify_grading(int k) {
    GradingReport rep;
    rep.k = k;
    std::vector<BasisElement> elems;
    try {
        elems = build_grading(k);
    } catch (const std::exception& e) {
        rep.first_failure = e.what();
        return rep;
    }
    rep.total = (long long)elems.size();

    std::map<std::pair<char, int>, long long> counts;
    for (const auto& el : elems) ++counts[{el.family, el.m}];
    for (const auto& [key, n] : counts) rep.counts.push_back({key.first, key.second, n});

    rep.counts_ok = true;
    if (k == 0) {
        rep.counts_ok = rep.total == 3;
    } else {
        long long expected_total = 2LL * (k + 1) * (k + 1);
        if (rep.total != expected_total) rep.counts_ok = false;
        for (int m = 0; m <= k; ++m) {
            long long want = (m == 0 || m == k) ? 2 * (k + 1) : (k + 1);
            if (counts[{'E', m}] != want) rep.counts_ok = false;
        }
        for (int m = 1; m <= k - 1; ++m)
            if (counts[{'F', m}] != k + 1) rep.counts_ok = false;
    }
    if (!rep.counts_ok && rep.first_failure.empty())
        rep.first_failure = "cardinality mismatch at k=" + std::to_string(k);

    rep.rank = coordinate_rank(elems);
    rep.rank_ok = rep.rank == rep.total;
    if (!rep.rank_ok && rep.first_failure.empty())
        rep.first_failure = "rank " + std::to_string(rep.rank) + " below cardinality";

    // Interior redundancy: the E/F combinations built from v1 agree with the
    // corresponding combinations built from v2, up to the stated factors.
    rep.identities_ok = true;
    for (int m = 1; m <= k - 1 && rep.identities_ok; ++m) {
        std::vector<Poly4> qm = build_Q(k, m);
        std::vector<Poly4> qm1 = build_Q(k, m + 1);
        for (int j = 0; j <= k; ++j) {
            FrameField c1 = curl_frame(v_field(qm[j], 1));
            FrameField c11 = curl_frame(c1);
            FrameField c2 = curl_frame(v_field(qm1[j], 2));
            FrameField c22 = curl_frame(c2);
            FrameField lhs1 = GaussianRational(k) * c1 + c11;
            FrameField rhs1 =
                GaussianRational::unit_i() * (GaussianRational(k) * c2 + c22);
            FrameField lhs2 = GaussianRational(k + 2) * c1 - c11;
            GaussianRational fac(Rational(0), -Rational(k - m) / Rational(m + 1));
            FrameField rhs2 = fac * (GaussianRational(k + 2) * c2 - c22);
            if (lhs1 != rhs1 || lhs2 != rhs2) {
                rep.identities_ok = false;
                std::ostringstream os;
                os << "redundancy identity failed at k=" << k << " m=" << m << " j=" << j
                   << "; lhs1.f1=" << sphere_normal_form(lhs1.f1).str()
                   << "; rhs1.f1=" << sphere_normal_form(rhs1.f1).str();
                if (rep.first_failure.empty()) rep.first_failure = os.str();
                break;
            }
        }
    }
    return rep;
}

std::vector<BasisElement> axisymmetric_filter(int k) {
    std::vector<BasisElement> out;
    if (k % 2 == 1) return out;
    for (const auto& el : build_grading(k))
        if (el.bracket_eig_im == 0) out.push_back(el);
    return out;
}

}  // namespace coad
