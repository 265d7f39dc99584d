#pragma once

#include <complex>

#include "opsqft/field.hpp"
#include "opsqft/ops_split.hpp"

namespace opsqft {

/// Identification of one split plane with C: v = anchor (x + y e) <-> x + i y,
/// where e is the context's g. Right multiplication by e^{e t} becomes
/// multiplication by e^{i t}.
struct PlaneEmbedding {
  Plane plane;
  Quaternion anchor;
  PureUnitQuaternion imaginary_unit;

  /// anchor * imaginary_unit; unit and orthogonal to anchor.
  Quaternion second() const { return anchor * imaginary_unit.value(); }

  std::complex<double> embed(const Quaternion& v) const {
    return {inner(v, anchor), inner(v, second())};
  }
  Quaternion unembed(std::complex<double> z) const {
    return z.real() * anchor + z.imag() * second();
  }
  /// Norm of the part of v outside the plane.
  double residual(const Quaternion& v) const { return norm(v - unembed(embed(v))); }
};

PlaneEmbedding plane_embedding(const OpsContext& ctx, Plane plane);

/// Embeds an in-plane field. Throws NotInPlane when a sample lies more than
/// 1e-8 * max(1, |v|) outside the plane.
ComplexField2D embed(const OpsContext& ctx, const QuaternionField2D& field, Plane plane);

QuaternionField2D unembed(const OpsContext& ctx, const ComplexField2D& cfield, Plane plane,
                          Domain domain = Domain::Spatial);

}  // namespace opsqft
