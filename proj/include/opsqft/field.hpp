#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "opsqft/quaternion.hpp"

namespace opsqft {

enum class Domain { Spatial, Frequency };

/// Row-major n1 x n2 grid; element (m1, m2) lives at m1 * n2 + m2.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2), data_(n1 * n2) {}
  Grid2D(std::size_t n1, std::size_t n2, std::vector<T> data);

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t m1, std::size_t m2) { return data_[m1 * n2_ + m2]; }
  const T& operator()(std::size_t m1, std::size_t m2) const { return data_[m1 * n2_ + m2]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool same_shape(const Grid2D& other) const { return n1_ == other.n1_ && n2_ == other.n2_; }

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
  std::vector<T> data_;
};

extern template class Grid2D<Quaternion>;
extern template class Grid2D<std::complex<double>>;

using ComplexField2D = Grid2D<std::complex<double>>;

class QuaternionField2D : public Grid2D<Quaternion> {
 public:
  QuaternionField2D() = default;
  QuaternionField2D(std::size_t n1, std::size_t n2, Domain domain = Domain::Spatial)
      : Grid2D(n1, n2), domain_(domain) {}
  QuaternionField2D(std::size_t n1, std::size_t n2, std::vector<Quaternion> data,
                    Domain domain = Domain::Spatial)
      : Grid2D(n1, n2, std::move(data)), domain_(domain) {}

  Domain domain() const { return domain_; }
  void set_domain(Domain domain) { domain_ = domain; }

 private:
  Domain domain_ = Domain::Spatial;
};

/// Largest per-component absolute difference. Throws ShapeMismatch.
double max_abs_diff(const QuaternionField2D& a, const QuaternionField2D& b);
double max_abs_diff(const ComplexField2D& a, const ComplexField2D& b);

/// Sum of squared sample norms.
double energy(const QuaternionField2D& field);
double energy(const ComplexField2D& field);

/// max_abs_diff(a, reference) / sqrt(energy(reference)); the plain
/// difference when the reference is identically zero.
double relative_diff(const QuaternionField2D& a, const QuaternionField2D& reference);
double relative_diff(const ComplexField2D& a, const ComplexField2D& reference);

QuaternionField2D operator+(const QuaternionField2D& a, const QuaternionField2D& b);
QuaternionField2D operator-(const QuaternionField2D& a, const QuaternionField2D& b);
QuaternionField2D operator*(double s, const QuaternionField2D& a);

QuaternionField2D conj(const QuaternionField2D& field);

}  // namespace opsqft
