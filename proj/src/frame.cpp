#include "coad/frame.hpp"

namespace coad {

FrameField& FrameField::operator+=(const FrameField& o) {
    f1 += o.f1;
    f2 += o.f2;
    f3 += o.f3;
    return *this;
}

FrameField& FrameField::operator-=(const FrameField& o) {
    f1 -= o.f1;
    f2 -= o.f2;
    f3 -= o.f3;
    return *this;
}

FrameField operator*(const GaussianRational& c, const FrameField& w) {
    return {c * w.f1, c * w.f2, c * w.f3};
}

FrameField curl_frame(const FrameField& w) {
    GaussianRational two(2);
    return {frame_derivative(2, w.f3) - frame_derivative(3, w.f2) + two * w.f1,
            frame_derivative(3, w.f1) - frame_derivative(1, w.f3) + two * w.f2,
            frame_derivative(1, w.f2) - frame_derivative(2, w.f1) + two * w.f3};
}

FrameField bracket_e1(const FrameField& w) {
    // [e2, e1] = 2 e3 and [e3, e1] = -2 e2
    GaussianRational two(2);
    return {-frame_derivative(1, w.f1),
            -(two * w.f3) - frame_derivative(1, w.f2),
            two * w.f2 - frame_derivative(1, w.f3)};
}

Poly4 divergence_frame(const FrameField& w) {
    return frame_derivative(1, w.f1) + frame_derivative(2, w.f2) + frame_derivative(3, w.f3);
}

FrameField sphere_normal_form(const FrameField& w) {
    return {sphere_normal_form(w.f1), sphere_normal_form(w.f2), sphere_normal_form(w.f3)};
}

}  // namespace coad
