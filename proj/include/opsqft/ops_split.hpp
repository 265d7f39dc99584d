#pragma once

#include <array>

#include "opsqft/quaternion.hpp"

namespace opsqft {

enum class Plane { Plus, Minus };

/// How g relates to f. Equal and Opposite are the one-unit (simplex/perplex) cases.
enum class Degeneracy { None, Equal, Opposite };

/// The orthogonal planes split q = q+ + q-, q+- = (q +- f q g) / 2, for a fixed
/// pair of pure unit quaternions.
///
/// For g != +-f the planes are
///   q+ : span(1 + fg, f - g)
///   q- : span(1 - fg, f + g)
/// For g == f the q- plane is span(1, f) and q+ is span(p, f p), with p a pure
/// unit orthogonal to f. For g == -f the two plane roles are exchanged.
class OpsContext {
 public:
  static constexpr double kDegeneracyTolerance = 1e-12;

  OpsContext(const PureUnitQuaternion& f, const PureUnitQuaternion& g);

  const PureUnitQuaternion& f() const { return f_; }
  const PureUnitQuaternion& g() const { return g_; }
  Degeneracy degeneracy() const { return degeneracy_; }
  bool degenerate() const { return degeneracy_ != Degeneracy::None; }

  /// Ordered, mutually orthogonal, nonzero spanning pair of a plane.
  const std::array<Quaternion, 2>& basis(Plane plane) const {
    return plane == Plane::Plus ? basis_plus_ : basis_minus_;
  }
  /// First basis element of a plane, normalized.
  const Quaternion& anchor(Plane plane) const {
    return plane == Plane::Plus ? anchor_plus_ : anchor_minus_;
  }

  /// Same pair with the roles of f and g exchanged.
  OpsContext reversed() const { return OpsContext(g_, f_); }

 private:
  PureUnitQuaternion f_;
  PureUnitQuaternion g_;
  Degeneracy degeneracy_ = Degeneracy::None;
  std::array<Quaternion, 2> basis_plus_;
  std::array<Quaternion, 2> basis_minus_;
  Quaternion anchor_plus_;
  Quaternion anchor_minus_;
};

OpsContext make_context(const PureUnitQuaternion& f, const PureUnitQuaternion& g);

/// The pure unit used to complete the plane {1, f} in the one-unit case: the
/// first of i, j, k whose component orthogonal to f is at least 0.5 long,
/// orthogonalized against f and normalized.
PureUnitQuaternion orthogonal_unit(const PureUnitQuaternion& f);

struct SplitParts {
  Quaternion plus;
  Quaternion minus;
};

SplitParts split(const OpsContext& ctx, const Quaternion& q);

/// f q g, which keeps q+ and flips the sign of q-.
Quaternion half_turn(const OpsContext& ctx, const Quaternion& q);

/// Coordinates of q in the basis (1+fg, f-g, 1-fg, f+g).
struct Coefficients {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
};

/// q1 = Sc(q (1+fg)^-1), q2 = Sc(q (f-g)^-1), q3 = Sc(q (1-fg)^-1),
/// q4 = Sc(q (f+g)^-1). Throws DegenerateContext if g == +-f.
Coefficients coefficients(const OpsContext& ctx, const Quaternion& q);

/// q1 (1+fg) + q2 (f-g) + q3 (1-fg) + q4 (f+g). Throws DegenerateContext if g == +-f.
Quaternion reconstruct(const OpsContext& ctx, const Coefficients& c);

enum class Assignment {
  AbToMinus,  ///< {a, b} becomes the q- plane, {c, d} the q+ plane.
  AbToPlus,   ///< {a, b} becomes the q+ plane, {c, d} the q- plane.
};

/// Chooses f, g so that the split separates two prescribed orthogonal planes
/// {a, b} and {c, d}:
///   f = b a,  g = +-(Sc(f conj(a)) a - Sc(f conj(c)) c).
/// a and c must be pure units; the frame must be orthonormal within 1e-9.
/// Throws InvalidFrame otherwise. The result may be degenerate.
OpsContext determine_context(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                             const Quaternion& d, Assignment assignment);

/// e^{alpha f} q e^{beta g}.
Quaternion rotate_split(const OpsContext& ctx, const Quaternion& q, double alpha,
                        double beta);

}  // namespace opsqft
