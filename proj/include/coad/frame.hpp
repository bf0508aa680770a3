#pragma once

#include "coad/poly4.hpp"

namespace coad {

// Vector field on S^3 expressed in the right-invariant frame e_1, e_2, e_3,
// with polynomial components. Degree-homogeneous components stay homogeneous
// under every operation here.
struct FrameField {
    Poly4 f1, f2, f3;

    FrameField() = default;
    FrameField(Poly4 a, Poly4 b, Poly4 c) : f1(std::move(a)), f2(std::move(b)), f3(std::move(c)) {}

    bool is_zero() const { return f1.is_zero() && f2.is_zero() && f3.is_zero(); }

    FrameField& operator+=(const FrameField& o);
    FrameField& operator-=(const FrameField& o);
    friend FrameField operator+(FrameField a, const FrameField& b) { return a += b; }
    friend FrameField operator-(FrameField a, const FrameField& b) { return a -= b; }
    friend FrameField operator*(const GaussianRational& c, const FrameField& w);
    friend bool operator==(const FrameField& a, const FrameField& b) {
        return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3;
    }
    friend bool operator!=(const FrameField& a, const FrameField& b) { return !(a == b); }
};

// curl in frame components:
//   (e2 f3 - e3 f2 + 2 f1, e3 f1 - e1 f3 + 2 f2, e1 f2 - e2 f1 + 2 f3).
FrameField curl_frame(const FrameField& w);

// [w, e1] = sum_i f_i [e_i, e1] - (e1 f_i) e_i.
FrameField bracket_e1(const FrameField& w);

// sum_i e_i(f_i); the frame fields are divergence-free, so this is the full
// divergence of w.
Poly4 divergence_frame(const FrameField& w);

FrameField sphere_normal_form(const FrameField& w);

}  // namespace coad
