#include <doctest.h>

#include <random>

#include "coad/frame.hpp"
#include "coad/s3_basis.hpp"

using namespace coad;

namespace {

GaussianRational gi(long long re, long long im) { return {Rational(re), Rational(im)}; }

Poly4 random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> coef(-4, 4);
    Poly4 p;
    for (int ex = 0; ex <= degree; ++ex)
        for (int ey = 0; ey + ex <= degree; ++ey)
            for (int ez = 0; ez + ey + ex <= degree; ++ez) {
                int ew = degree - ex - ey - ez;
                p.add_term(Monomial4(ex, ey, ez, ew), gi(coef(rng), coef(rng)));
            }
    return p;
}

// Cartesian coefficient polynomials of the frame fields
Poly4 frame_component(int i, int axis) {
    auto x = [](int a) { return Poly4::variable(a); };
    static const int sign[3][4] = {{-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}};
    static const int var[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Poly4 p = x(var[i - 1][axis]);
    return sign[i - 1][axis] == 1 ? p : -p;
}

// independent oracle: full Cartesian divergence of the extended field
// W^a = sum_i f_i (e_i)^a; for sphere-tangent fields this equals the
// tangential divergence on the sphere
Poly4 cartesian_divergence(const FrameField& w) {
    Poly4 out;
    const Poly4* comps[3] = {&w.f1, &w.f2, &w.f3};
    for (int a = 0; a < 4; ++a) {
        Poly4 Wa;
        for (int i = 1; i <= 3; ++i) Wa += (*comps[i - 1]) * frame_component(i, a);
        out += Wa.derivative(a);
    }
    return out;
}

}  // namespace

TEST_CASE("frame derivative on the complex coordinates") {
    Poly4 a = Poly4::alpha(), ab = Poly4::alpha_bar(), b = Poly4::beta(), bb = Poly4::beta_bar();
    CHECK(frame_derivative(1, a) == GaussianRational::unit_i() * a);
    CHECK(frame_derivative(1, ab) == -GaussianRational::unit_i() * ab);
    CHECK(frame_derivative(1, b) == GaussianRational::unit_i() * b);
    CHECK(frame_derivative(2, ab) == -b);
    CHECK(frame_derivative(2, a) == -bb);
    CHECK(frame_derivative(3, a) == -GaussianRational::unit_i() * bb);
}

TEST_CASE("frame derivative weight relation on Q") {
    for (int k : {1, 2, 3, 5}) {
        for (int m = 0; m <= k; ++m) {
            auto q = build_Q(k, m);
            for (int j = 0; j <= k; ++j) {
                CHECK(frame_derivative(1, q[j]) == gi(0, 2 * m - k) * q[j]);
                // e2 Q^m = m Q^{m-1} - (k-m) Q^{m+1}
                Poly4 expect;
                if (m > 0) expect += gi(m, 0) * build_Q(k, m - 1)[j];
                if (m < k) expect -= gi(k - m, 0) * build_Q(k, m + 1)[j];
                CHECK(frame_derivative(2, q[j]) == expect);
            }
        }
    }
}

TEST_CASE("frame derivative satisfies the Leibniz rule") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        Poly4 f = random_poly(rng, 2);
        Poly4 g = random_poly(rng, 3);
        for (int i = 1; i <= 3; ++i)
            CHECK(frame_derivative(i, f * g) ==
                  f * frame_derivative(i, g) + g * frame_derivative(i, f));
    }
}

TEST_CASE("euclidean laplacian") {
    Poly4 r2;
    for (int a = 0; a < 4; ++a) r2 += Poly4::variable(a) * Poly4::variable(a);
    CHECK(euclidean_laplacian(r2) == Poly4::constant(gi(-8, 0)));

    CHECK(euclidean_laplacian(Poly4::alpha() * Poly4::beta()).is_zero());

    for (int k : {2, 4}) {
        for (int m = 0; m <= k; ++m)
            for (const auto& q : build_Q(k, m)) CHECK(euclidean_laplacian(q).is_zero());
    }
}

TEST_CASE("curl of the frame fields") {
    Poly4 one = Poly4::constant(gi(1, 0));
    FrameField e1 = v_field(one, 1);
    CHECK(curl_frame(e1) == gi(2, 0) * e1);

    for (int k : {1, 3}) {
        auto q = build_Q(k, 0);
        for (int j = 0; j <= k; ++j) {
            FrameField v2 = v_field(q[j], 2);
            CHECK(curl_frame(v2) == gi(k + 2, 0) * v2);
        }
    }
}

TEST_CASE("curl annihilates the gradient combination of Q") {
    for (int k : {1, 2, 4}) {
        auto q0 = build_Q(k, 0);
        auto q1 = build_Q(k, 1);
        for (int j = 0; j <= k; ++j) {
            // grad Q_kj^0 = -ik v1^0 - k v2^1
            FrameField grad = gi(0, -k) * v_field(q0[j], 1) - gi(k, 0) * v_field(q1[j], 2);
            CHECK(curl_frame(grad).is_zero());
        }
    }
}

TEST_CASE("bracket with e1") {
    Poly4 one = Poly4::constant(gi(1, 0));
    FrameField e1 = v_field(one, 1);
    CHECK(bracket_e1(e1).is_zero());

    FrameField w = v_field(one, 2);  // e2 - i e3
    CHECK(bracket_e1(w) == gi(0, 2) * w);

    for (const auto& el : build_grading(2)) {
        CHECK(bracket_e1(el.field) == GaussianRational::i_times(el.bracket_eig_im) * el.field);
    }
}

TEST_CASE("divergence against the Cartesian oracle") {
    Poly4 one = Poly4::constant(gi(1, 0));
    CHECK(divergence_frame(v_field(one, 1)).is_zero());

    std::mt19937 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        FrameField w{random_poly(rng, 2), random_poly(rng, 2), random_poly(rng, 2)};
        CHECK(divergence_frame(w) == cartesian_divergence(w));
        CHECK(sphere_normal_form(divergence_frame(curl_frame(w))).is_zero());
    }
    // higher-degree components
    FrameField w6{random_poly(rng, 6), random_poly(rng, 5), random_poly(rng, 6)};
    CHECK(divergence_frame(w6) == cartesian_divergence(w6));
    CHECK(sphere_normal_form(divergence_frame(curl_frame(w6))).is_zero());

    for (const auto& el : build_grading(3)) CHECK(divergence_frame(el.field).is_zero());
}

TEST_CASE("sphere normal form") {
    Poly4 r2m1;
    for (int a = 0; a < 4; ++a) r2m1 += Poly4::variable(a) * Poly4::variable(a);
    r2m1 -= Poly4::constant(gi(1, 0));
    CHECK(sphere_normal_form(r2m1).is_zero());

    Poly4 x = Poly4::variable(0);
    CHECK(sphere_normal_form((r2m1 + Poly4::constant(gi(1, 0))) * x) == x);

    std::mt19937 rng(17);
    Poly4 f = random_poly(rng, 4), g = random_poly(rng, 3);
    Poly4 nf = sphere_normal_form(f);
    CHECK(sphere_normal_form(nf) == nf);  // idempotent
    CHECK(sphere_normal_form(f + g) == sphere_normal_form(f) + sphere_normal_form(g));

    // curl-eigen residual of a degree-3 element reduces to zero
    for (const auto& el : build_grading(3)) {
        FrameField res = curl_frame(el.field) - gi(el.curl_eig, 0) * el.field;
        CHECK(sphere_normal_form(res.f1).is_zero());
        CHECK(sphere_normal_form(res.f2).is_zero());
        CHECK(sphere_normal_form(res.f3).is_zero());
    }
}

TEST_CASE("curl squared gives eigenvalue squared on the basis") {
    for (int k = 0; k <= 4; ++k) {
        for (const auto& el : build_grading(k)) {
            long long ev2 = (long long)el.curl_eig * el.curl_eig;
            CHECK(curl_frame(curl_frame(el.field)) == gi(ev2, 0) * el.field);
        }
    }
}
