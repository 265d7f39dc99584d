#include "opsqft/random.hpp"

#include <cmath>
#include <numbers>

namespace opsqft {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::array<double, 3> random_vector3(Rng& rng) {
  return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
}

}  // namespace

Quaternion random_quaternion(Rng& rng) {
  return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
          uniform(rng, -1.0, 1.0)};
}

PureUnitQuaternion random_pure_unit(Rng& rng) {
  while (true) {
    const auto v = random_vector3(rng);
    const double len2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (len2 > 1e-4 && len2 <= 1.0) return PureUnitQuaternion(v[0], v[1], v[2]);
  }
}

OpsContext random_context(Rng& rng) {
  const PureUnitQuaternion f = random_pure_unit(rng);
  return OpsContext(f, random_pure_unit(rng));
}

QuaternionField2D random_field(Rng& rng, std::size_t n1, std::size_t n2) {
  QuaternionField2D field(n1, n2);
  for (auto& q : field.data()) q = random_quaternion(rng);
  return field;
}

std::array<Quaternion, 4> random_frame(Rng& rng) {
  while (true) {
    const Quaternion x = pure(Quaternion{0.0, uniform(rng, -1, 1), uniform(rng, -1, 1),
                                         uniform(rng, -1, 1)});
    Quaternion y{0.0, uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const double nx = norm(x);
    if (nx < 1e-6) continue;
    const Quaternion a = x / nx;
    y -= inner(y, a) * a;
    const double ny = norm(y);
    if (ny < 1e-6) continue;
    const Quaternion c = y / ny;
    // For orthonormal pure a, c the product a c is the pure unit a x c.
    const Quaternion n = pure(a * c);
    const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const Quaternion b = std::cos(theta) * kOne + std::sin(theta) * n;
    const Quaternion d = -std::sin(theta) * kOne + std::cos(theta) * n;
    return {a, b, c, d};
  }
}

std::vector<OpsContext> test_contexts(Rng& rng, std::size_t count) {
  const PureUnitQuaternion i(1, 0, 0);
  const PureUnitQuaternion j(0, 1, 0);
  std::vector<OpsContext> out{OpsContext(i, j), OpsContext(i, i), OpsContext(i, -i)};
  const PureUnitQuaternion f = random_pure_unit(rng);
  // A pure unit orthogonal to f.
  out.emplace_back(f, orthogonal_unit(f));
  const PureUnitQuaternion h = random_pure_unit(rng);
  out.emplace_back(h, h);
  out.emplace_back(h, -h);
  while (out.size() < count) out.push_back(random_context(rng));
  return out;
}

}  // namespace opsqft
