#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "qpb/scalar.hpp"

namespace qpb {

inline constexpr std::size_t kDefaultMaxEntries = 10'000'000;

/// Throws SizeLimitError when a dense table of `entries` exceeds `cap`.
void check_entry_cap(std::size_t entries, std::size_t cap, const char* what);

/// A function on a cartesian product of finite sets, stored as a dense
/// row-major value table (last index fastest). C(X)⊗C(Y) is identified
/// with C(X×Y) by concatenating shapes.
class Func {
 public:
  Func() = default;
  explicit Func(std::vector<int> shape);

  static Func constant(std::vector<int> shape, const Scalar& v);
  static Func indicator(std::vector<int> shape, std::span<const int> at);
  static Func indicator(std::vector<int> shape, std::initializer_list<int> at) {
    return indicator(std::move(shape), std::span<const int>(at.begin(), at.size()));
  }

  const std::vector<int>& shape() const { return shape_; }
  std::size_t size() const { return values_.size(); }
  int rank() const { return static_cast<int>(shape_.size()); }

  Scalar& operator[](std::size_t flat) { return values_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return values_[flat]; }
  Scalar& at(std::initializer_list<int> idx) { return values_[flat_index(idx)]; }
  const Scalar& at(std::initializer_list<int> idx) const { return values_[flat_index(idx)]; }
  Scalar& at(std::span<const int> idx) { return values_[flat_index(idx)]; }
  const Scalar& at(std::span<const int> idx) const { return values_[flat_index(idx)]; }

  std::size_t flat_index(std::span<const int> idx) const;
  std::size_t flat_index(std::initializer_list<int> idx) const {
    return flat_index(std::span<const int>(idx.begin(), idx.size()));
  }
  void unflatten(std::size_t flat, std::span<int> out) const;

  std::vector<Scalar>& values() { return values_; }
  const std::vector<Scalar>& values() const { return values_; }

  bool is_zero() const;
  /// First flat index where the two tables differ, or size() if equal.
  std::size_t first_difference(const Func& other) const;

  Func& operator+=(const Func& o);
  Func& operator-=(const Func& o);
  Func& operator*=(const Scalar& s);
  friend Func operator+(Func a, const Func& b) { return a += b; }
  friend Func operator-(Func a, const Func& b) { return a -= b; }
  friend Func operator*(Func a, const Scalar& s) { return a *= s; }
  friend Func operator*(const Scalar& s, Func a) { return a *= s; }
  friend bool operator==(const Func& a, const Func& b) {
    return a.shape_ == b.shape_ && a.values_ == b.values_;
  }

 private:
  void require_same_shape(const Func& o) const;

  std::vector<int> shape_;
  std::vector<Scalar> values_;
};

/// (f·g)(x) = f(x)g(x).
Func pointwise_mul(const Func& f, const Func& g);

/// (f⊗g)(x, y) = f(x)g(y).
Func tensor_identify(const Func& f, const Func& g);

/// Applies a linear map to the legs [first, first + count) of a tensor,
/// leaving the other legs untouched: (id ⊗ map ⊗ id)(f). `map` receives a
/// Func over the selected legs and must return Funcs of one fixed shape.
Func apply_to_legs(const Func& f, int first, int count,
                   const std::function<Func(const Func&)>& map);

/// Restriction of f to the diagonal of legs `i` and `i + 1` (multiplication
/// in the function algebra: m(u ⊗ v)(x) = u(x)v(x)).
Func multiply_legs(const Func& f, int i);

std::size_t shape_product(std::span<const int> shape);

}  // namespace qpb
