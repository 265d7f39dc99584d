#include <gtest/gtest.h>

#include <cmath>

#include "opsqft/complex_embed.hpp"
#include "opsqft/errors.hpp"
#include "opsqft/random.hpp"
#include "test_util.hpp"

namespace opsqft {
namespace {

const OpsContext kIJ(PureUnitQuaternion(1, 0, 0), PureUnitQuaternion(0, 1, 0));

QuaternionField2D single(const Quaternion& q) { return QuaternionField2D(1, 1, {q}); }

TEST(Embed, AnchorAndItsRightMultiple) {
  const double h = 1.0 / std::sqrt(2.0);
  const Quaternion anchor{h, 0, 0, h};
  EXPECT_TRUE(QuatNear(kIJ.anchor(Plane::Plus), anchor, 1e-16));

  const std::complex<double> one = embed(kIJ, single(anchor), Plane::Plus).data()[0];
  EXPECT_NEAR(one.real(), 1.0, 1e-15);
  EXPECT_NEAR(one.imag(), 0.0, 1e-15);

  // ((1+k)/sqrt2) j = (j - i)/sqrt2
  const Quaternion rotated{0, -h, h, 0};
  EXPECT_TRUE(QuatNear(anchor * kJ, rotated, 1e-16));
  const std::complex<double> unit_i = embed(kIJ, single(rotated), Plane::Plus).data()[0];
  EXPECT_NEAR(unit_i.real(), 0.0, 1e-15);
  EXPECT_NEAR(unit_i.imag(), 1.0, 1e-15);
}

TEST(Embed, ZeroFieldsAndUnembedAnchor) {
  const ComplexField2D z = embed(kIJ, QuaternionField2D(3, 2), Plane::Minus);
  for (const auto& v : z.data()) EXPECT_EQ(v, std::complex<double>{});
  const QuaternionField2D back = unembed(kIJ, ComplexField2D(3, 2), Plane::Plus);
  for (const auto& q : back.data()) EXPECT_EQ(q, Quaternion{});

  ComplexField2D unit(1, 1);
  unit.data()[0] = 1.0;
  EXPECT_TRUE(QuatNear(unembed(kIJ, unit, Plane::Plus).data()[0],
                       Quaternion{1, 0, 0, 1} / std::sqrt(2.0), 1e-16));
}

TEST(Embed, RejectsOutOfPlaneSamples) {
  EXPECT_THROW(embed(kIJ, single(kOne), Plane::Plus), NotInPlane);
  EXPECT_THROW(embed(kIJ, single(Quaternion{1, 0, 0, 1}), Plane::Minus), NotInPlane);
  EXPECT_NO_THROW(embed(kIJ, single(Quaternion{1, 0, 0, 1 + 1e-10}), Plane::Plus));
}

TEST(Embed, PlaneIsClosedUnderImaginaryUnit) {
  Rng rng(8);
  for (const OpsContext& ctx : test_contexts(rng, 30)) {
    for (const Plane plane : {Plane::Plus, Plane::Minus}) {
      const PlaneEmbedding e = plane_embedding(ctx, plane);
      EXPECT_LE(e.residual(e.anchor), 1e-15);
      EXPECT_LE(e.residual(e.second()), 1e-15);
      EXPECT_NEAR(inner(e.anchor, e.second()), 0.0, 1e-15);
      EXPECT_NEAR(norm(e.second()), 1.0, 1e-15);
    }
  }
}

TEST(EmbedProperties, IsometryIntertwiningRoundTrip) {
  Rng rng(19);
  std::uniform_real_distribution<double> angle(-4, 4);
  for (const OpsContext& ctx : test_contexts(rng, 30)) {
    for (const Plane plane : {Plane::Plus, Plane::Minus}) {
      QuaternionField2D field(3, 4);
      for (auto& q : field.data()) {
        const SplitParts s = split(ctx, random_quaternion(rng));
        q = plane == Plane::Plus ? s.plus : s.minus;
      }
      const ComplexField2D z = embed(ctx, field, plane);
      for (std::size_t n = 0; n < field.size(); ++n) {
        EXPECT_NEAR(std::abs(z.data()[n]), norm(field.data()[n]), 1e-12);
      }
      EXPECT_LE(max_abs_diff(unembed(ctx, z, plane), field), 1e-13);

      const double theta = angle(rng);
      QuaternionField2D turned = field;
      for (auto& q : turned.data()) q = q * exp_pure(ctx.g(), theta);
      const ComplexField2D zt = embed(ctx, turned, plane);
      for (std::size_t n = 0; n < field.size(); ++n) {
        EXPECT_LE(std::abs(zt.data()[n] - z.data()[n] * std::polar(1.0, theta)), 1e-12);
      }

      ComplexField2D c(2, 2);
      for (auto& v : c.data()) v = {angle(rng), angle(rng)};
      EXPECT_LE(max_abs_diff(embed(ctx, unembed(ctx, c, plane), plane), c), 1e-13);
    }
  }
}

}  // namespace
}  // namespace opsqft
