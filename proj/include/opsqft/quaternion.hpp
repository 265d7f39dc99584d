#pragma once

#include <iosfwd>

namespace opsqft {

/// An element of the real quaternion algebra, q = r + i*i + j*j + k*k.
struct Quaternion {
  double r = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double i_ = 0.0, double j_ = 0.0, double k_ = 0.0)
      : r(r_), i(i_), j(j_), k(k_) {}

  constexpr Quaternion& operator+=(const Quaternion& q) {
    r += q.r; i += q.i; j += q.j; k += q.k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    r -= q.r; i -= q.i; j -= q.j; k -= q.k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r *= s; i *= s; j *= s; k *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.r, -q.i, -q.j, -q.k}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.r / s, q.i / s, q.j / s, q.k / s};
}

/// Hamilton product: ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.r * q.r - p.i * q.i - p.j * q.j - p.k * q.k,
          p.r * q.i + p.i * q.r + p.j * q.k - p.k * q.j,
          p.r * q.j - p.i * q.k + p.j * q.r + p.k * q.i,
          p.r * q.k + p.i * q.j - p.j * q.i + p.k * q.r};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

/// Quaternion conjugate (reversion): negates the i, j, k parts.
constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.i, -q.j, -q.k}; }

constexpr double scalar_part(const Quaternion& q) { return q.r; }

/// Pure part q - Sc(q).
constexpr Quaternion pure(const Quaternion& q) { return {0.0, q.i, q.j, q.k}; }

/// R^4 inner product Sc(p * conj(q)).
constexpr double inner(const Quaternion& p, const Quaternion& q) {
  return p.r * q.r + p.i * q.i + p.j * q.j + p.k * q.k;
}

constexpr double norm_squared(const Quaternion& q) { return inner(q, q); }

double norm(const Quaternion& q);

/// conj(q) / |q|^2. Throws ZeroQuaternion for q == 0.
Quaternion inverse(const Quaternion& q);

/// Largest absolute component difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

/// A pure quaternion of unit norm, so that u * u == -1.
///
/// Construction normalizes the pure part. Inputs with a scalar part above
/// 1e-12 or a pure part shorter than 1e-9 are rejected with InvalidPureUnit.
class PureUnitQuaternion {
 public:
  static constexpr double kScalarTolerance = 1e-12;
  static constexpr double kMinMagnitude = 1e-9;

  PureUnitQuaternion(double x, double y, double z);
  explicit PureUnitQuaternion(const Quaternion& q);

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

  PureUnitQuaternion operator-() const;

 private:
  struct Normalized {};
  PureUnitQuaternion(Normalized, const Quaternion& q) : q_(q) {}

  Quaternion q_;
};

/// e^{angle * u} = cos(angle) + sin(angle) u.
Quaternion exp_pure(const PureUnitQuaternion& u, double angle);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace opsqft
