#include <doctest.h>

#include "coad/io.hpp"
#include "coad/s3_basis.hpp"

using namespace coad;

namespace {
GaussianRational gi(long long re, long long im) { return {Rational(re), Rational(im)}; }

long long count_family(const std::vector<BasisElement>& g, char fam) {
    long long n = 0;
    for (const auto& el : g)
        if (el.family == fam) ++n;
    return n;
}
}  // namespace

TEST_CASE("Q polynomials at low degree") {
    Poly4 a = Poly4::alpha(), ab = Poly4::alpha_bar(), b = Poly4::beta(), bb = Poly4::beta_bar();

    auto q11 = build_Q(1, 1);
    REQUIRE(q11.size() == 2);
    CHECK(q11[0] == b);
    CHECK(q11[1] == a);

    auto q10 = build_Q(1, 0);
    CHECK(q10[0] == ab);
    CHECK(q10[1] == -bb);

    auto q21 = build_Q(2, 1);
    REQUIRE(q21.size() == 3);
    CHECK(q21[0] == ab * b);
    CHECK(q21[1] == a * ab - b * bb);
    CHECK(q21[2] == -(a * bb));
}

TEST_CASE("Q polynomials are linearly independent per weight") {
    for (int k : {2, 3}) {
        std::vector<BasisElement> fake;
        for (int m = 0; m <= k; ++m)
            for (const auto& q : build_Q(k, m))
                fake.push_back({FrameField(q, Poly4(), Poly4()), 'E', k, m, 0, k + 2, 0});
        CHECK(coordinate_rank(fake) == (long long)fake.size());
    }
}

TEST_CASE("grading k=0") {
    auto g = build_grading(0);
    REQUIRE(g.size() == 3);
    for (const auto& el : g) {
        CHECK(el.curl_eig == 2);
        CHECK(curl_frame(el.field) == gi(2, 0) * el.field);
    }
    auto rep = verify_grading(0);
    CHECK(rep.ok());
    CHECK(rep.total == 3);
    CHECK(rep.rank == 3);
}

TEST_CASE("grading k=1") {
    auto g = build_grading(1);
    REQUIRE(g.size() == 8);
    for (const auto& el : g) {
        CHECK(el.curl_eig == 3);
        CHECK((el.bracket_eig_im == 1 || el.bracket_eig_im == -1));
    }
}

TEST_CASE("grading k=3 family counts and eigenvalues") {
    auto g = build_grading(3);
    CHECK(count_family(g, 'E') == (3 + 3) * (3 + 1));  // (k+3)(k+1) = 24
    CHECK(count_family(g, 'F') == (3 + 1) * (3 - 1));  // (k+1)(k-1) = 8
    for (const auto& el : g) CHECK(el.curl_eig == (el.family == 'E' ? 5 : -3));
}

TEST_CASE("verify_grading k=2 and k=4") {
    auto rep2 = verify_grading(2);
    CHECK(rep2.ok());
    CHECK(rep2.total == 18);
    long long e = 0, f = 0;
    for (const auto& c : rep2.counts) (c.family == 'E' ? e : f) += c.count;
    CHECK(e == 15);
    CHECK(f == 3);

    auto rep4 = verify_grading(4);
    CHECK(rep4.ok());
    CHECK(rep4.identities_ok);  // redundancy identities for all interior m, all j
    CHECK(rep4.total == 50);
    CHECK(rep4.rank == 50);
}

TEST_CASE("per-weight cardinalities match the basis proposition") {
    for (int k : {1, 2, 4}) {
        auto rep = verify_grading(k);
        for (const auto& c : rep.counts) {
            if (c.family == 'E')
                CHECK(c.count == ((c.m == 0 || c.m == k) ? 2 * (k + 1) : k + 1));
            else
                CHECK(c.count == k + 1);
        }
    }
}

TEST_CASE("axisymmetric filter") {
    CHECK(axisymmetric_filter(3).empty());
    CHECK(axisymmetric_filter(1).empty());

    auto g0 = axisymmetric_filter(0);
    REQUIRE(g0.size() == 1);
    CHECK(g0[0].field.f1 == Poly4::constant(gi(1, 0)));
    CHECK(g0[0].field.f2.is_zero());

    auto g4 = axisymmetric_filter(4);
    CHECK(count_family(g4, 'E') == 5);
    CHECK(count_family(g4, 'F') == 5);
    for (const auto& el : g4) {
        CHECK(el.m == 2);
        CHECK(el.bracket_eig_im == 0);
    }
}

TEST_CASE("grading serialization round-trip") {
    auto g = build_grading(2);
    Json j = grading_json(g);
    auto back = grading_from_json(j);
    REQUIRE(back.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(back[i].family == g[i].family);
        CHECK(back[i].k == g[i].k);
        CHECK(back[i].m == g[i].m);
        CHECK(back[i].j == g[i].j);
        CHECK(back[i].curl_eig == g[i].curl_eig);
        CHECK(back[i].bracket_eig_im == g[i].bracket_eig_im);
        CHECK(back[i].field == g[i].field);
    }
}

TEST_CASE("rational round-trip through strings") {
    Rational r(-22, 7);
    CHECK(rational_from_string(to_string(r)) == r);
    CHECK(rational_from_string("5") == Rational(5));
}
