#include "opsqft/complex_embed.hpp"

#include <algorithm>
#include <sstream>

#include "opsqft/errors.hpp"

namespace opsqft {

namespace {
constexpr double kPlaneTolerance = 1e-8;
}

PlaneEmbedding plane_embedding(const OpsContext& ctx, Plane plane) {
  return PlaneEmbedding{plane, ctx.anchor(plane), ctx.g()};
}

ComplexField2D embed(const OpsContext& ctx, const QuaternionField2D& field, Plane plane) {
  const PlaneEmbedding emb = plane_embedding(ctx, plane);
  ComplexField2D out(field.n1(), field.n2());
  for (std::size_t n = 0; n < field.size(); ++n) {
    const Quaternion& v = field.data()[n];
    const double off = emb.residual(v);
    if (off > kPlaneTolerance * std::max(1.0, norm(v))) {
      std::ostringstream msg;
      msg << "sample " << n << " lies " << off << " outside the "
          << (plane == Plane::Plus ? "q+" : "q-") << " plane";
      throw NotInPlane(msg.str());
    }
    out.data()[n] = emb.embed(v);
  }
  return out;
}

QuaternionField2D unembed(const OpsContext& ctx, const ComplexField2D& cfield, Plane plane,
                          Domain domain) {
  const PlaneEmbedding emb = plane_embedding(ctx, plane);
  QuaternionField2D out(cfield.n1(), cfield.n2(), domain);
  for (std::size_t n = 0; n < cfield.size(); ++n) out.data()[n] = emb.unembed(cfield.data()[n]);
  return out;
}

}  // namespace opsqft
