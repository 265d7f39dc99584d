#include "opsqft/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace opsqft {

namespace {

using cd = std::complex<double>;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double sign_value(Sign s) { return static_cast<double>(static_cast<int>(s)); }

/// e^{s i 2 pi r / n} for r = 0..n-1.
std::vector<cd> roots(std::size_t n, Sign sign) {
  std::vector<cd> table(n);
  const double step = sign_value(sign) * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r) table[r] = std::polar(1.0, step * static_cast<double>(r));
  return table;
}

void radix2(std::span<cd> a, Sign sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cd> twiddle;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const double step = sign_value(sign) * 2.0 * std::numbers::pi / static_cast<double>(len);
    twiddle.resize(half);
    for (std::size_t t = 0; t < half; ++t) twiddle[t] = std::polar(1.0, step * static_cast<double>(t));
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t t = 0; t < half; ++t) {
        const cd u = a[start + t];
        const cd v = a[start + t + half] * twiddle[t];
        a[start + t] = u + v;
        a[start + t + half] = u - v;
      }
    }
  }
}

void direct1(std::span<cd> a, Sign sign) {
  const std::size_t n = a.size();
  const std::vector<cd> w = roots(n, sign);
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cd acc{};
    for (std::size_t m = 0; m < n; ++m) acc += a[m] * w[(m * k) % n];
    out[k] = acc;
  }
  std::copy(out.begin(), out.end(), a.begin());
}

}  // namespace

void fft1(std::span<cd> data, Sign sign) {
  if (data.size() <= 1) return;
  if (is_power_of_two(data.size())) {
    radix2(data, sign);
  } else {
    direct1(data, sign);
  }
}

ComplexField2D transform_axis(const ComplexField2D& field, int axis, Sign sign) {
  ComplexField2D out = field;
  const std::size_t n1 = field.n1();
  const std::size_t n2 = field.n2();
  if (axis == 2) {
    for (std::size_t m1 = 0; m1 < n1; ++m1) {
      fft1(std::span<cd>(out.data().data() + m1 * n2, n2), sign);
    }
  } else if (axis == 1) {
    std::vector<cd> column(n1);
    for (std::size_t m2 = 0; m2 < n2; ++m2) {
      for (std::size_t m1 = 0; m1 < n1; ++m1) column[m1] = out(m1, m2);
      fft1(column, sign);
      for (std::size_t m1 = 0; m1 < n1; ++m1) out(m1, m2) = column[m1];
    }
  } else {
    throw std::invalid_argument("transform_axis: axis must be 1 or 2");
  }
  return out;
}

ComplexField2D fft2(const ComplexField2D& field, AxisSigns signs) {
  return transform_axis(transform_axis(field, 2, signs.s2), 1, signs.s1);
}

ComplexField2D dft2_direct(const ComplexField2D& field, AxisSigns signs) {
  const std::size_t n1 = field.n1();
  const std::size_t n2 = field.n2();
  ComplexField2D out(n1, n2);
  if (field.size() == 0) return out;
  const std::vector<cd> w1 = roots(n1, signs.s1);
  const std::vector<cd> w2 = roots(n2, signs.s2);
  for (std::size_t k1 = 0; k1 < n1; ++k1) {
    for (std::size_t k2 = 0; k2 < n2; ++k2) {
      cd acc{};
      for (std::size_t m1 = 0; m1 < n1; ++m1) {
        const cd row = w1[(m1 * k1) % n1];
        for (std::size_t m2 = 0; m2 < n2; ++m2) {
          acc += field(m1, m2) * (row * w2[(m2 * k2) % n2]);
        }
      }
      out(k1, k2) = acc;
    }
  }
  return out;
}

}  // namespace opsqft
