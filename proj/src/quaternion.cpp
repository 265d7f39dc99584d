#include "opsqft/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "opsqft/errors.hpp"

namespace opsqft {

double norm(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_squared(q);
  if (n2 == 0.0) {
    throw ZeroQuaternion("inverse of the zero quaternion");
  }
  return conj(q) / n2;
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.r - q.r), std::abs(p.i - q.i), std::abs(p.j - q.j),
                   std::abs(p.k - q.k)});
}

PureUnitQuaternion::PureUnitQuaternion(double x, double y, double z)
    : PureUnitQuaternion(Quaternion{0.0, x, y, z}) {}

PureUnitQuaternion::PureUnitQuaternion(const Quaternion& q) {
  if (!std::isfinite(q.r) || !std::isfinite(q.i) || !std::isfinite(q.j) ||
      !std::isfinite(q.k)) {
    throw InvalidPureUnit("pure unit quaternion with non-finite component");
  }
  if (std::abs(q.r) > kScalarTolerance) {
    std::ostringstream msg;
    msg << "pure unit quaternion has scalar part " << q.r;
    throw InvalidPureUnit(msg.str());
  }
  const double len = std::sqrt(q.i * q.i + q.j * q.j + q.k * q.k);
  if (len < kMinMagnitude) {
    throw InvalidPureUnit("pure part too short to define a direction");
  }
  q_ = Quaternion{0.0, q.i / len, q.j / len, q.k / len};
  const double residual = q_.i * q_.i + q_.j * q_.j + q_.k * q_.k - 1.0;
  if (std::abs(residual) > 1e-12) {
    throw InvalidPureUnit("pure unit quaternion failed normalization");
  }
}

PureUnitQuaternion PureUnitQuaternion::operator-() const {
  return PureUnitQuaternion(Normalized{}, -q_);
}

Quaternion exp_pure(const PureUnitQuaternion& u, double angle) {
  const Quaternion& q = u.value();
  const double s = std::sin(angle);
  return {std::cos(angle), s * q.i, s * q.j, s * q.k};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17) << '(' << q.r << ", " << q.i << ", " << q.j << ", " << q.k
     << ')';
  os.flags(flags);
  os.precision(prec);
  return os;
}

}  // namespace opsqft
