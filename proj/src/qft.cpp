#include "opsqft/qft.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "opsqft/complex_embed.hpp"
#include "opsqft/errors.hpp"
#include "opsqft/fft.hpp"

namespace opsqft {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 2 pi (m k mod n) / n.
double phase(std::size_t m, std::size_t k, std::size_t n) {
  return kTwoPi * static_cast<double>((m * k) % n) / static_cast<double>(n);
}

/// e^{u * sign * 2 pi r / n} for r = 0..n-1.
std::vector<Quaternion> exp_table(const PureUnitQuaternion& u, double sign, std::size_t n) {
  std::vector<Quaternion> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    table[r] = exp_pure(u, sign * kTwoPi * static_cast<double>(r) / static_cast<double>(n));
  }
  return table;
}

/// out[p] = scale * sum_s L(s, p) in[s] R(s, p), summed row-major over s.
template <typename KernelFn>
QuaternionField2D double_sum(const QuaternionField2D& in, KernelFn kernel, double scale,
                             Domain domain) {
  const std::size_t n1 = in.n1();
  const std::size_t n2 = in.n2();
  QuaternionField2D out(n1, n2, domain);
  for (std::size_t p1 = 0; p1 < n1; ++p1) {
    for (std::size_t p2 = 0; p2 < n2; ++p2) {
      Quaternion acc;
      for (std::size_t s1 = 0; s1 < n1; ++s1) {
        for (std::size_t s2 = 0; s2 < n2; ++s2) {
          const auto [left, right] = kernel(s1, s2, p1, p2);
          acc += left * in(s1, s2) * right;
        }
      }
      out(p1, p2) = scale * acc;
    }
  }
  return out;
}

double inverse_scale(const QuaternionField2D& field) {
  return 1.0 / static_cast<double>(field.n1() * field.n2());
}

/// Two-sided sum with left unit on axis 1 and right unit on axis 2.
QuaternionField2D two_sided_direct(const PureUnitQuaternion& left_unit,
                                   const PureUnitQuaternion& right_unit, double sign,
                                   const QuaternionField2D& in, double scale, Domain domain) {
  const auto left = exp_table(left_unit, sign, in.n1());
  const auto right = exp_table(right_unit, sign, in.n2());
  const std::size_t n1 = in.n1();
  const std::size_t n2 = in.n2();
  return double_sum(
      in,
      [&](std::size_t s1, std::size_t s2, std::size_t p1, std::size_t p2) {
        return std::pair{left[(s1 * p1) % n1], right[(s2 * p2) % n2]};
      },
      scale, domain);
}

/// Half-angle kernels e^{f sign (a+b)/2} . e^{g sign (a-b)/2}.
QuaternionField2D phase_angle_direct(const OpsContext& ctx, double sign,
                                     const QuaternionField2D& in, double scale,
                                     Domain domain) {
  const std::size_t n1 = in.n1();
  const std::size_t n2 = in.n2();
  return double_sum(
      in,
      [&](std::size_t s1, std::size_t s2, std::size_t p1, std::size_t p2) {
        // Half-angle kernels are 2N periodic in each index.
        const double t1 = std::numbers::pi * static_cast<double>((s1 * p1) % (2 * n1)) /
                          static_cast<double>(n1);
        const double t2 = std::numbers::pi * static_cast<double>((s2 * p2) % (2 * n2)) /
                          static_cast<double>(n2);
        return std::pair{exp_pure(ctx.f(), sign * (t1 + t2)),
                         exp_pure(ctx.g(), sign * (t1 - t2))};
      },
      scale, domain);
}

/// Split with respect to ctx, transform each embedded plane with its own
/// axis signs, and recombine.
QuaternionField2D planes_fft(const OpsContext& ctx, const QuaternionField2D& in,
                             AxisSigns plus_signs, AxisSigns minus_signs, double scale,
                             Domain domain) {
  const SplitFields parts = split_field(ctx, in);
  const PlaneEmbedding plus = plane_embedding(ctx, Plane::Plus);
  const PlaneEmbedding minus = plane_embedding(ctx, Plane::Minus);
  ComplexField2D zplus(in.n1(), in.n2());
  ComplexField2D zminus(in.n1(), in.n2());
  for (std::size_t n = 0; n < in.size(); ++n) {
    zplus.data()[n] = plus.embed(parts.plus.data()[n]);
    zminus.data()[n] = minus.embed(parts.minus.data()[n]);
  }
  zplus = fft2(zplus, plus_signs);
  zminus = fft2(zminus, minus_signs);
  QuaternionField2D out(in.n1(), in.n2(), domain);
  for (std::size_t n = 0; n < in.size(); ++n) {
    out.data()[n] = scale * (plus.unembed(zplus.data()[n]) + minus.unembed(zminus.data()[n]));
  }
  return out;
}

/// Sums z over the axis not kept, transforms the remaining line along the
/// kept axis, and broadcasts the result back over the summed axis.
ComplexField2D collapse_and_transform(const ComplexField2D& z, int kept_axis, Sign sign) {
  const std::size_t n1 = z.n1();
  const std::size_t n2 = z.n2();
  const std::size_t len = kept_axis == 1 ? n1 : n2;
  std::vector<cd> line(len);
  for (std::size_t m1 = 0; m1 < n1; ++m1) {
    for (std::size_t m2 = 0; m2 < n2; ++m2) line[kept_axis == 1 ? m1 : m2] += z(m1, m2);
  }
  fft1(line, sign);
  ComplexField2D out(n1, n2);
  for (std::size_t k1 = 0; k1 < n1; ++k1) {
    for (std::size_t k2 = 0; k2 < n2; ++k2) out(k1, k2) = line[kept_axis == 1 ? k1 : k2];
  }
  return out;
}

/// Phase-angle family through its split forms: the q+ part only sees axis 2
/// and the q- part only axis 1.
QuaternionField2D phase_angle_fast(const OpsContext& ctx, const QuaternionField2D& in,
                                   Sign plus_sign, Sign minus_sign, double scale,
                                   Domain domain) {
  const SplitFields parts = split_field(ctx, in);
  const PlaneEmbedding plus = plane_embedding(ctx, Plane::Plus);
  const PlaneEmbedding minus = plane_embedding(ctx, Plane::Minus);
  ComplexField2D zplus(in.n1(), in.n2());
  ComplexField2D zminus(in.n1(), in.n2());
  for (std::size_t n = 0; n < in.size(); ++n) {
    zplus.data()[n] = plus.embed(parts.plus.data()[n]);
    zminus.data()[n] = minus.embed(parts.minus.data()[n]);
  }
  zplus = collapse_and_transform(zplus, 2, plus_sign);
  zminus = collapse_and_transform(zminus, 1, minus_sign);
  QuaternionField2D out(in.n1(), in.n2(), domain);
  for (std::size_t n = 0; n < in.size(); ++n) {
    out.data()[n] = scale * (plus.unembed(zplus.data()[n]) + minus.unembed(zminus.data()[n]));
  }
  return out;
}

void require_variant(const TransformVariant& requested, const Spectrum& spec) {
  if (!same_variant(requested, spec.variant)) {
    throw VariantMismatch("spectrum was produced by a different transform variant");
  }
}

}  // namespace

bool same_variant(const TransformVariant& a, const TransformVariant& b) {
  constexpr double tol = 1e-12;
  return a.family == b.family && max_abs_diff(a.ctx.f().value(), b.ctx.f().value()) <= tol &&
         max_abs_diff(a.ctx.g().value(), b.ctx.g().value()) <= tol;
}

SplitFields split_field(const OpsContext& ctx, const QuaternionField2D& field) {
  SplitFields out{QuaternionField2D(field.n1(), field.n2(), field.domain()),
                  QuaternionField2D(field.n1(), field.n2(), field.domain())};
  for (std::size_t n = 0; n < field.size(); ++n) {
    const SplitParts parts = split(ctx, field.data()[n]);
    out.plus.data()[n] = parts.plus;
    out.minus.data()[n] = parts.minus;
  }
  return out;
}

OpsContext spectrum_context(const TransformVariant& variant) {
  return variant.family == Family::ConjugateC ? variant.ctx.reversed() : variant.ctx;
}

Spectrum forward_direct(const TransformVariant& variant, const QuaternionField2D& field) {
  const OpsContext& ctx = variant.ctx;
  QuaternionField2D out;
  switch (variant.family) {
    case Family::TwoSided:
      out = two_sided_direct(ctx.f(), ctx.g(), -1.0, field, 1.0, Domain::Frequency);
      break;
    case Family::PhaseAngleD:
      out = phase_angle_direct(ctx, -1.0, field, 1.0, Domain::Frequency);
      break;
    case Family::ConjugateC:
      out = two_sided_direct(ctx.g(), ctx.f(), -1.0, conj(field), 1.0, Domain::Frequency);
      break;
  }
  return {std::move(out), variant};
}

QuaternionField2D inverse_direct(const TransformVariant& variant, const Spectrum& spec) {
  require_variant(variant, spec);
  const OpsContext& ctx = variant.ctx;
  const QuaternionField2D& freq = spec.field;
  const double scale = inverse_scale(freq);
  switch (variant.family) {
    case Family::TwoSided:
      return two_sided_direct(ctx.f(), ctx.g(), 1.0, freq, scale, Domain::Spatial);
    case Family::PhaseAngleD:
      return phase_angle_direct(ctx, 1.0, freq, scale, Domain::Spatial);
    case Family::ConjugateC: {
      // e^{-f b} conj(F) e^{-g a}: the left unit runs along axis 2, the right along axis 1.
      const auto left = exp_table(ctx.f(), -1.0, freq.n2());
      const auto right = exp_table(ctx.g(), -1.0, freq.n1());
      const std::size_t n1 = freq.n1();
      const std::size_t n2 = freq.n2();
      return double_sum(
          conj(freq),
          [&](std::size_t s1, std::size_t s2, std::size_t p1, std::size_t p2) {
            return std::pair{left[(s2 * p2) % n2], right[(s1 * p1) % n1]};
          },
          scale, Domain::Spatial);
    }
  }
  throw VariantMismatch("unknown transform family");
}

Spectrum forward_fast(const TransformVariant& variant, const QuaternionField2D& field) {
  constexpr AxisSigns kPlus{Sign::Positive, Sign::Negative};
  constexpr AxisSigns kMinus{Sign::Negative, Sign::Negative};
  const OpsContext& ctx = variant.ctx;
  QuaternionField2D out;
  switch (variant.family) {
    case Family::TwoSided:
      // h+ e^{-g (b - a)}, h- e^{-g (b + a)}.
      out = planes_fft(ctx, field, kPlus, kMinus, 1.0, Domain::Frequency);
      break;
    case Family::PhaseAngleD:
      // h+ e^{g b}, h- e^{-g a}.
      out = phase_angle_fast(ctx, field, Sign::Positive, Sign::Negative, 1.0,
                             Domain::Frequency);
      break;
    case Family::ConjugateC:
      // conj(h+-) are the (g, f) split parts of conj(h), with kernel units swapped.
      out = planes_fft(ctx.reversed(), conj(field), kPlus, kMinus, 1.0, Domain::Frequency);
      break;
  }
  return {std::move(out), variant};
}

QuaternionField2D inverse_fast(const TransformVariant& variant, const Spectrum& spec) {
  require_variant(variant, spec);
  const OpsContext& ctx = variant.ctx;
  const QuaternionField2D& freq = spec.field;
  const double scale = inverse_scale(freq);
  switch (variant.family) {
    case Family::TwoSided:
      // F+ e^{g (b - a)}, F- e^{g (a + b)}.
      return planes_fft(ctx, freq, {Sign::Negative, Sign::Positive},
                        {Sign::Positive, Sign::Positive}, scale, Domain::Spatial);
    case Family::PhaseAngleD:
      // F+ e^{-g b}, F- e^{g a}.
      return phase_angle_fast(ctx, freq, Sign::Negative, Sign::Positive, scale,
                              Domain::Spatial);
    case Family::ConjugateC:
      // G = conj(F): G+ e^{g (b - a)}, G- e^{-g (a + b)}.
      return planes_fft(ctx, conj(freq), {Sign::Negative, Sign::Positive},
                        {Sign::Negative, Sign::Negative}, scale, Domain::Spatial);
  }
  throw VariantMismatch("unknown transform family");
}

SplitSpectra split_spectra(const TransformVariant& variant, const QuaternionField2D& field) {
  const SplitFields parts = split_field(variant.ctx, field);
  return {forward_fast(variant, parts.plus), forward_fast(variant, parts.minus)};
}

QuaternionField2D split_form(const TransformVariant& variant, const QuaternionField2D& field,
                             Plane plane, KernelSide side) {
  const OpsContext& ctx = variant.ctx;
  const SplitFields parts = split_field(ctx, field);
  QuaternionField2D in = plane == Plane::Plus ? parts.plus : parts.minus;
  const double pm = plane == Plane::Plus ? 1.0 : -1.0;
  const std::size_t n1 = field.n1();
  const std::size_t n2 = field.n2();

  // Returns the kernel exponent as (unit, angle) for given phases a, b.
  auto kernel_of = [&](double a, double b) -> std::pair<PureUnitQuaternion, double> {
    switch (variant.family) {
      case Family::TwoSided:
        return side == KernelSide::Right ? std::pair{ctx.g(), -(b - pm * a)}
                                         : std::pair{ctx.f(), -(a - pm * b)};
      case Family::PhaseAngleD:
        if (plane == Plane::Plus) {
          return side == KernelSide::Right ? std::pair{ctx.g(), b} : std::pair{ctx.f(), -b};
        }
        return side == KernelSide::Right ? std::pair{ctx.g(), -a} : std::pair{ctx.f(), -a};
      case Family::ConjugateC:
        return side == KernelSide::Right ? std::pair{ctx.f(), -(b - pm * a)}
                                         : std::pair{ctx.g(), -(a - pm * b)};
    }
    throw VariantMismatch("unknown transform family");
  };

  if (variant.family == Family::ConjugateC) in = conj(in);
  return double_sum(
      in,
      [&](std::size_t m1, std::size_t m2, std::size_t k1, std::size_t k2) {
        const auto [unit, angle] = kernel_of(phase(m1, k1, n1), phase(m2, k2, n2));
        const Quaternion e = exp_pure(unit, angle);
        return side == KernelSide::Right ? std::pair{kOne, e} : std::pair{e, kOne};
      },
      1.0, Domain::Frequency);
}

CommutationReport transform_commutes_with_split(const TransformVariant& variant,
                                                const QuaternionField2D& field) {
  const OpsContext sctx = spectrum_context(variant);
  const Spectrum full = forward_direct(variant, field);
  const SplitFields of_spectrum = split_field(sctx, full.field);
  const SplitFields of_field = split_field(variant.ctx, field);
  CommutationReport report;
  report.residual_plus =
      max_abs_diff(of_spectrum.plus, forward_direct(variant, of_field.plus).field);
  report.residual_minus =
      max_abs_diff(of_spectrum.minus, forward_direct(variant, of_field.minus).field);
  report.passed = report.residual_plus <= CommutationReport::kTolerance &&
                  report.residual_minus <= CommutationReport::kTolerance;
  return report;
}

}  // namespace opsqft
