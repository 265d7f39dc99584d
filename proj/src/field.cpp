#include "opsqft/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opsqft/errors.hpp"

namespace opsqft {

template <typename T>
Grid2D<T>::Grid2D(std::size_t n1, std::size_t n2, std::vector<T> data)
    : n1_(n1), n2_(n2), data_(std::move(data)) {
  if (data_.size() != n1_ * n2_) {
    std::ostringstream msg;
    msg << "grid " << n1_ << "x" << n2_ << " given " << data_.size() << " samples";
    throw ShapeMismatch(msg.str());
  }
}

template class Grid2D<Quaternion>;
template class Grid2D<std::complex<double>>;

namespace {

template <typename T>
void require_same_shape(const Grid2D<T>& a, const Grid2D<T>& b) {
  if (!a.same_shape(b)) {
    std::ostringstream msg;
    msg << "field shapes differ: " << a.n1() << "x" << a.n2() << " vs " << b.n1() << "x"
        << b.n2();
    throw ShapeMismatch(msg.str());
  }
}

template <typename Field>
double relative(const Field& a, const Field& reference) {
  const double diff = max_abs_diff(a, reference);
  const double scale = std::sqrt(energy(reference));
  return scale > 0.0 ? diff / scale : diff;
}

template <typename Op>
QuaternionField2D zip(const QuaternionField2D& a, const QuaternionField2D& b, Op op) {
  require_same_shape<Quaternion>(a, b);
  QuaternionField2D out(a.n1(), a.n2(), a.domain());
  for (std::size_t n = 0; n < a.size(); ++n) out.data()[n] = op(a.data()[n], b.data()[n]);
  return out;
}

}  // namespace

double max_abs_diff(const QuaternionField2D& a, const QuaternionField2D& b) {
  require_same_shape<Quaternion>(a, b);
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    worst = std::max(worst, max_abs_diff(a.data()[n], b.data()[n]));
  }
  return worst;
}

double max_abs_diff(const ComplexField2D& a, const ComplexField2D& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto d = a.data()[n] - b.data()[n];
    worst = std::max({worst, std::abs(d.real()), std::abs(d.imag())});
  }
  return worst;
}

double energy(const QuaternionField2D& field) {
  double sum = 0.0;
  for (const auto& q : field.data()) sum += norm_squared(q);
  return sum;
}

double energy(const ComplexField2D& field) {
  double sum = 0.0;
  for (const auto& z : field.data()) sum += std::norm(z);
  return sum;
}

double relative_diff(const QuaternionField2D& a, const QuaternionField2D& reference) {
  return relative(a, reference);
}

double relative_diff(const ComplexField2D& a, const ComplexField2D& reference) {
  return relative(a, reference);
}

QuaternionField2D operator+(const QuaternionField2D& a, const QuaternionField2D& b) {
  return zip(a, b, [](const Quaternion& p, const Quaternion& q) { return p + q; });
}

QuaternionField2D operator-(const QuaternionField2D& a, const QuaternionField2D& b) {
  return zip(a, b, [](const Quaternion& p, const Quaternion& q) { return p - q; });
}

QuaternionField2D operator*(double s, const QuaternionField2D& a) {
  QuaternionField2D out = a;
  for (auto& q : out.data()) q *= s;
  return out;
}

QuaternionField2D conj(const QuaternionField2D& field) {
  QuaternionField2D out = field;
  for (auto& q : out.data()) q = conj(q);
  return out;
}

}  // namespace opsqft
