#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "coad/rational.hpp"

namespace coad {

// Exponent 4-tuple for monomials in (x, y, z, w), packed so that the integer
// order on keys is the lexicographic order on (x, y, z, w).
struct Monomial4 {
    std::uint32_t key = 0;

    Monomial4() = default;
    Monomial4(int ex, int ey, int ez, int ew)
        : key((std::uint32_t(ex) << 24) | (std::uint32_t(ey) << 16) | (std::uint32_t(ez) << 8) |
              std::uint32_t(ew)) {}

    int exp(int axis) const { return int(key >> (8 * (3 - axis))) & 0xff; }
    int degree() const { return exp(0) + exp(1) + exp(2) + exp(3); }

    friend bool operator<(Monomial4 a, Monomial4 b) { return a.key < b.key; }
    friend bool operator==(Monomial4 a, Monomial4 b) { return a.key == b.key; }
};

// Polynomial on R^4 with exact Gaussian-rational coefficients. Zero
// coefficients are never stored, so equality is map equality.
class Poly4 {
  public:
    using TermMap = std::map<Monomial4, GaussianRational>;

    Poly4() = default;

    static Poly4 constant(GaussianRational c);
    static Poly4 variable(int axis);  // 0:x 1:y 2:z 3:w

    // Complex coordinate views over the Cartesian representation.
    static Poly4 alpha();      // x + iy
    static Poly4 alpha_bar();  // x - iy
    static Poly4 beta();       // z + iw
    static Poly4 beta_bar();   // z - iw

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    // Degree if every term has the same total degree (zero poly -> 0).
    std::optional<int> homogeneous_degree() const;

    const TermMap& terms() const { return terms_; }

    void add_term(Monomial4 m, const GaussianRational& c);

    Poly4& operator+=(const Poly4& o);
    Poly4& operator-=(const Poly4& o);
    friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
    friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }
    friend Poly4 operator*(const Poly4& a, const Poly4& b);
    friend Poly4 operator*(const GaussianRational& c, const Poly4& p);
    friend Poly4 operator-(const Poly4& p) { return GaussianRational(-1) * p; }
    friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly4& a, const Poly4& b) { return !(a == b); }

    Poly4 derivative(int axis) const;

    std::string str() const;

  private:
    TermMap terms_;
};

// Derivation along the right-invariant frame fields e_1, e_2, e_3 of S^3,
// using their Cartesian coefficient forms (exact on all of R^4).
Poly4 frame_derivative(int i, const Poly4& f);

// Positive-definite Euclidean Laplacian, -(d_xx + d_yy + d_zz + d_ww).
Poly4 euclidean_laplacian(const Poly4& f);

// Unique normal form modulo x^2+y^2+z^2+w^2-1 under the lexicographic order
// on (x, y, z, w): rewrites x^2 -> 1 - y^2 - z^2 - w^2 until the x-exponent
// of every term is at most 1. Idempotent and linear.
Poly4 sphere_normal_form(const Poly4& f);

}  // namespace coad
