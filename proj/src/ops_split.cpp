#include "opsqft/ops_split.hpp"

#include <cmath>
#include <sstream>

#include "opsqft/errors.hpp"

namespace opsqft {

namespace {

constexpr double kFrameTolerance = 1e-9;

bool same_within(const Quaternion& a, const Quaternion& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

Degeneracy classify(const Quaternion& f, const Quaternion& g) {
  if (same_within(f, g, OpsContext::kDegeneracyTolerance)) return Degeneracy::Equal;
  if (same_within(f, -g, OpsContext::kDegeneracyTolerance)) return Degeneracy::Opposite;
  return Degeneracy::None;
}

void require_nondegenerate(const OpsContext& ctx, const char* what) {
  if (ctx.degenerate()) {
    throw DegenerateContext(std::string(what) +
                            ": basis 1+fg or 1-fg vanishes when g = +-f");
  }
}

}  // namespace

PureUnitQuaternion orthogonal_unit(const PureUnitQuaternion& f) {
  const Quaternion& u = f.value();
  for (const Quaternion& e : {kI, kJ, kK}) {
    const Quaternion rest = e - inner(e, u) * u;
    if (norm(rest) >= 0.5) return PureUnitQuaternion(rest);
  }
  // Unreachable: the squared orthogonal parts of i, j, k sum to 2.
  throw InvalidPureUnit("no axis orthogonal to f");
}

OpsContext::OpsContext(const PureUnitQuaternion& f, const PureUnitQuaternion& g)
    : f_(f), g_(g), degeneracy_(classify(f, g)) {
  const Quaternion& fq = f_.value();
  const Quaternion& gq = g_.value();
  if (degeneracy_ == Degeneracy::None) {
    const Quaternion fg = fq * gq;
    basis_plus_ = {kOne + fg, fq - gq};
    basis_minus_ = {kOne - fg, fq + gq};
  } else {
    const Quaternion p = orthogonal_unit(f_).value();
    const std::array<Quaternion, 2> complex_plane{kOne, fq};
    const std::array<Quaternion, 2> complement{p, fq * p};
    if (degeneracy_ == Degeneracy::Equal) {
      basis_minus_ = complex_plane;
      basis_plus_ = complement;
    } else {
      basis_plus_ = complex_plane;
      basis_minus_ = complement;
    }
  }
  anchor_plus_ = basis_plus_[0] / norm(basis_plus_[0]);
  anchor_minus_ = basis_minus_[0] / norm(basis_minus_[0]);
}

OpsContext make_context(const PureUnitQuaternion& f, const PureUnitQuaternion& g) {
  return OpsContext(f, g);
}

SplitParts split(const OpsContext& ctx, const Quaternion& q) {
  const Quaternion turned = half_turn(ctx, q);
  return {0.5 * (q + turned), 0.5 * (q - turned)};
}

Quaternion half_turn(const OpsContext& ctx, const Quaternion& q) {
  return ctx.f().value() * q * ctx.g().value();
}

Coefficients coefficients(const OpsContext& ctx, const Quaternion& q) {
  require_nondegenerate(ctx, "coefficients");
  const auto& plus = ctx.basis(Plane::Plus);
  const auto& minus = ctx.basis(Plane::Minus);
  return {scalar_part(q * inverse(plus[0])), scalar_part(q * inverse(plus[1])),
          scalar_part(q * inverse(minus[0])), scalar_part(q * inverse(minus[1]))};
}

Quaternion reconstruct(const OpsContext& ctx, const Coefficients& c) {
  require_nondegenerate(ctx, "reconstruct");
  const auto& plus = ctx.basis(Plane::Plus);
  const auto& minus = ctx.basis(Plane::Minus);
  return c.q1 * plus[0] + c.q2 * plus[1] + c.q3 * minus[0] + c.q4 * minus[1];
}

OpsContext determine_context(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                             const Quaternion& d, Assignment assignment) {
  const std::array<const Quaternion*, 4> frame{&a, &b, &c, &d};
  constexpr std::array<char, 4> names{'a', 'b', 'c', 'd'};
  for (std::size_t n = 0; n < frame.size(); ++n) {
    if (std::abs(norm(*frame[n]) - 1.0) > kFrameTolerance) {
      throw InvalidFrame(std::string("frame element ") + names[n] + " is not a unit quaternion");
    }
    for (std::size_t m = n + 1; m < frame.size(); ++m) {
      if (std::abs(inner(*frame[n], *frame[m])) > kFrameTolerance) {
        throw InvalidFrame(std::string("frame elements ") + names[n] + " and " + names[m] +
                           " are not orthogonal");
      }
    }
  }
  if (std::abs(a.r) > kFrameTolerance) throw InvalidFrame("frame element a is not pure");
  if (std::abs(c.r) > kFrameTolerance) throw InvalidFrame("frame element c is not pure");

  // b a is pure for b orthogonal to a; drop the rounding residue in the scalar slot.
  const PureUnitQuaternion f(pure(b * a));
  const Quaternion& fq = f.value();
  Quaternion g = scalar_part(fq * conj(a)) * a - scalar_part(fq * conj(c)) * c;
  if (assignment == Assignment::AbToPlus) g = -g;
  return OpsContext(f, PureUnitQuaternion(pure(g)));
}

Quaternion rotate_split(const OpsContext& ctx, const Quaternion& q, double alpha,
                        double beta) {
  return exp_pure(ctx.f(), alpha) * q * exp_pure(ctx.g(), beta);
}

}  // namespace opsqft
