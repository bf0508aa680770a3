#include "coad/poly4.hpp"

#include <sstream>
#include <stdexcept>

namespace coad {

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Poly4 Poly4::constant(GaussianRational c) {
    Poly4 p;
    p.add_term(Monomial4(0, 0, 0, 0), c);
    return p;
}

Poly4 Poly4::variable(int axis) {
    Poly4 p;
    int e[4] = {0, 0, 0, 0};
    e[axis] = 1;
    p.add_term(Monomial4(e[0], e[1], e[2], e[3]), GaussianRational(1));
    return p;
}

Poly4 Poly4::alpha() {
    Poly4 p = variable(0);
    p.add_term(Monomial4(0, 1, 0, 0), GaussianRational::unit_i());
    return p;
}

Poly4 Poly4::alpha_bar() {
    Poly4 p = variable(0);
    p.add_term(Monomial4(0, 1, 0, 0), -GaussianRational::unit_i());
    return p;
}

Poly4 Poly4::beta() {
    Poly4 p = variable(2);
    p.add_term(Monomial4(0, 0, 0, 1), GaussianRational::unit_i());
    return p;
}

Poly4 Poly4::beta_bar() {
    Poly4 p = variable(2);
    p.add_term(Monomial4(0, 0, 0, 1), -GaussianRational::unit_i());
    return p;
}

int Poly4::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<int> Poly4::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

void Poly4::add_term(Monomial4 m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly4& Poly4::operator+=(const Poly4& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial4 m;
            m.key = ma.key + mb.key;  // per-byte exponent sums, no carries at our degrees
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly4 operator*(const GaussianRational& c, const Poly4& p) {
    Poly4 out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
    return out;
}

Poly4 Poly4::derivative(int axis) const {
    Poly4 out;
    for (const auto& [m, c] : terms_) {
        int e = m.exp(axis);
        if (e == 0) continue;
        Monomial4 d = m;
        d.key -= std::uint32_t(1) << (8 * (3 - axis));
        out.add_term(d, GaussianRational(e) * c);
    }
    return out;
}

std::string Poly4::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* names = "xyzw";
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (int a = 0; a < 4; ++a) {
            int e = m.exp(a);
            if (e == 1) os << names[a];
            if (e > 1) os << names[a] << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Cartesian coefficients of e_i: row i holds (c_x, c_y, c_z, c_w) as signed
// variable indices; value v means sign(v) * coordinate(|v|-1).
constexpr int kFrame[3][4] = {
    {-2, +1, -4, +3},  // e1 = -y dx + x dy - w dz + z dw
    {-3, +4, +1, -2},  // e2 = -z dx + w dy + x dz - y dw
    {-4, -3, +2, +1},  // e3 = -w dx - z dy + y dz + x dw
};

}  // namespace

Poly4 frame_derivative(int i, const Poly4& f) {
    if (i < 1 || i > 3) throw std::invalid_argument("frame index must be 1..3");
    Poly4 out;
    for (int a = 0; a < 4; ++a) {
        int v = kFrame[i - 1][a];
        int axis = std::abs(v) - 1;
        Poly4 term = Poly4::variable(axis) * f.derivative(a);
        if (v < 0)
            out -= term;
        else
            out += term;
    }
    return out;
}

Poly4 euclidean_laplacian(const Poly4& f) {
    Poly4 out;
    for (int a = 0; a < 4; ++a) out -= f.derivative(a).derivative(a);
    return out;
}

Poly4 sphere_normal_form(const Poly4& f) {
    // one := 1 - y^2 - z^2 - w^2 replaces each factor x^2
    Poly4 sub = Poly4::constant(GaussianRational(1));
    sub.add_term(Monomial4(0, 2, 0, 0), GaussianRational(-1));
    sub.add_term(Monomial4(0, 0, 2, 0), GaussianRational(-1));
    sub.add_term(Monomial4(0, 0, 0, 2), GaussianRational(-1));

    Poly4 cur = f;
    while (true) {
        Poly4 reduced;
        Poly4 carry;
        bool changed = false;
        for (const auto& [m, c] : cur.terms()) {
            int ex = m.exp(0);
            if (ex < 2) {
                reduced.add_term(m, c);
                continue;
            }
            changed = true;
            Poly4 rest;
            rest.add_term(Monomial4(ex - 2, m.exp(1), m.exp(2), m.exp(3)), c);
            carry += rest * sub;
        }
        reduced += carry;
        cur = std::move(reduced);
        if (!changed) return cur;
    }
}

}  // namespace coad
