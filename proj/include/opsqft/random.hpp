#pragma once

#include <array>
#include <random>
#include <vector>

#include "opsqft/field.hpp"
#include "opsqft/ops_split.hpp"
#include "opsqft/quaternion.hpp"

namespace opsqft {

using Rng = std::mt19937_64;

/// Components uniform in [-1, 1).
Quaternion random_quaternion(Rng& rng);
/// Uniform on the unit 2-sphere of pure quaternions.
PureUnitQuaternion random_pure_unit(Rng& rng);
/// Independent random f and g.
OpsContext random_context(Rng& rng);
QuaternionField2D random_field(Rng& rng, std::size_t n1, std::size_t n2);

/// A random orthonormal frame {a, b, c, d} of R^4 with a and c pure. a and c
/// come from modified Gram-Schmidt on random 3-vectors; b and d are then a
/// random rotation of {1, a c} in the remaining plane.
std::array<Quaternion, 4> random_frame(Rng& rng);

/// Contexts covering the cases every suite should see: (i, j), (i, i),
/// (i, -i), an orthogonal pair, random (f, f) and (f, -f), then random pairs up
/// to `count` in total.
std::vector<OpsContext> test_contexts(Rng& rng, std::size_t count);

}  // namespace opsqft
