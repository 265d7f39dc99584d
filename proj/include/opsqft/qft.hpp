#pragma once

#include "opsqft/field.hpp"
#include "opsqft/ops_split.hpp"

namespace opsqft {

/// Transform families. Passing a context with g == f gives the one-unit
/// specializations of each family.
enum class Family {
  TwoSided,     ///< sum e^{-f a} h e^{-g b}
  PhaseAngleD,  ///< sum e^{-f (a+b)/2} h e^{-g (a-b)/2}
  ConjugateC,   ///< sum e^{-g a} conj(h) e^{-f b}
};

/// With a = 2 pi m1 k1 / N1 and b = 2 pi m2 k2 / N2 throughout. Inverses carry
/// the factor 1 / (N1 N2).
struct TransformVariant {
  Family family;
  OpsContext ctx;
};

/// Frequency-domain field tagged with the variant that produced it.
struct Spectrum {
  QuaternionField2D field;
  TransformVariant variant;
};

/// True when both variants have the same family and the same f, g within 1e-12.
bool same_variant(const TransformVariant& a, const TransformVariant& b);

/// Literal double sums, accumulated in row-major order.
Spectrum forward_direct(const TransformVariant& variant, const QuaternionField2D& field);
/// Throws VariantMismatch if spec was produced by a different variant.
QuaternionField2D inverse_direct(const TransformVariant& variant, const Spectrum& spec);

/// Split into q+ and q- planes, embed each in C, and apply complex FFTs with
/// the per-plane sign pattern.
Spectrum forward_fast(const TransformVariant& variant, const QuaternionField2D& field);
QuaternionField2D inverse_fast(const TransformVariant& variant, const Spectrum& spec);

/// The context whose split of the spectrum commutes with the forward transform.
/// This is ctx for TwoSided and PhaseAngleD. For ConjugateC it is the reversed
/// pair (g, f), because conj maps the (f, g) planes onto the (g, f) planes.
OpsContext spectrum_context(const TransformVariant& variant);

struct SplitFields {
  QuaternionField2D plus;
  QuaternionField2D minus;
};

/// Samplewise split of a field.
SplitFields split_field(const OpsContext& ctx, const QuaternionField2D& field);

struct SplitSpectra {
  Spectrum plus;   ///< forward(h+)
  Spectrum minus;  ///< forward(h-)
};

/// Transforms of the two split parts of field, with h+- = (h +- f h g) / 2.
SplitSpectra split_spectra(const TransformVariant& variant, const QuaternionField2D& field);

enum class KernelSide { Left, Right };

/// Direct evaluation of the single-kernel complex form of one split part.
///
///   TwoSided:    h+- e^{-g (b -+ a)}        or  e^{-f (a -+ b)} h+-
///   PhaseAngleD: h+ e^{g b}, h- e^{-g a}    or  e^{-f b} h+, e^{-f a} h-
///   ConjugateC:  conj(h+-) e^{-f (b -+ a)}  or  e^{-g (a -+ b)} conj(h+-)
QuaternionField2D split_form(const TransformVariant& variant, const QuaternionField2D& field,
                             Plane plane, KernelSide side);

struct CommutationReport {
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  bool passed = false;

  static constexpr double kTolerance = 1e-10;
};

/// Compares the split of forward(h) with forward of the split parts of h.
CommutationReport transform_commutes_with_split(const TransformVariant& variant,
                                                const QuaternionField2D& field);

}  // namespace opsqft
