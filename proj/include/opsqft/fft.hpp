#pragma once

#include <complex>
#include <span>

#include "opsqft/field.hpp"

namespace opsqft {

/// Sign s of the exponent e^{s i 2 pi m k / N}.
enum class Sign : int { Negative = -1, Positive = 1 };

struct AxisSigns {
  Sign s1 = Sign::Negative;
  Sign s2 = Sign::Negative;
};

/// Literal O(N1^2 N2^2) double sum
///   F[k1,k2] = sum_m x[m1,m2] e^{i (s1 2 pi m1 k1 / N1 + s2 2 pi m2 k2 / N2)}.
ComplexField2D dft2_direct(const ComplexField2D& field, AxisSigns signs);

/// Same contract as dft2_direct, computed one axis at a time.
ComplexField2D fft2(const ComplexField2D& field, AxisSigns signs);

/// Unnormalized 1D transform in place. Iterative radix-2 for power-of-two
/// lengths, direct summation otherwise.
void fft1(std::span<std::complex<double>> data, Sign sign);

/// 1D transform of every line along axis 1 (columns, fixed m2) or axis 2 (rows).
ComplexField2D transform_axis(const ComplexField2D& field, int axis, Sign sign);

}  // namespace opsqft
