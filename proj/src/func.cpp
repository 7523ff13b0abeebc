#include "qpb/func.hpp"

#include <algorithm>
#include <string>

#include "qpb/error.hpp"

namespace qpb {

void check_entry_cap(std::size_t entries, std::size_t cap, const char* what) {
  if (entries > cap)
    throw SizeLimitError(std::string(what) + " needs " + std::to_string(entries) +
                         " entries, above the cap of " + std::to_string(cap));
}

std::size_t shape_product(std::span<const int> shape) {
  std::size_t n = 1;
  for (int s : shape) {
    if (s < 0) throw StructuralError("negative dimension in shape");
    n *= static_cast<std::size_t>(s);
  }
  return n;
}

Func::Func(std::vector<int> shape) : shape_(std::move(shape)), values_(shape_product(shape_)) {}

Func Func::constant(std::vector<int> shape, const Scalar& v) {
  Func f(std::move(shape));
  std::fill(f.values_.begin(), f.values_.end(), v);
  return f;
}

Func Func::indicator(std::vector<int> shape, std::span<const int> at) {
  Func f(std::move(shape));
  f.values_[f.flat_index(at)] = 1;
  return f;
}

std::size_t Func::flat_index(std::span<const int> idx) const {
  if (idx.size() != shape_.size())
    throw StructuralError("index arity " + std::to_string(idx.size()) + " does not match rank " +
                          std::to_string(shape_.size()));
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= shape_[k])
      throw StructuralError("index " + std::to_string(idx[k]) + " out of range on leg " +
                            std::to_string(k));
    flat = flat * shape_[k] + idx[k];
  }
  return flat;
}

void Func::unflatten(std::size_t flat, std::span<int> out) const {
  for (std::size_t k = shape_.size(); k-- > 0;) {
    out[k] = static_cast<int>(flat % shape_[k]);
    flat /= shape_[k];
  }
}

bool Func::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Func::first_difference(const Func& other) const {
  if (shape_ != other.shape_) return 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != other.values_[i]) return i;
  return values_.size();
}

void Func::require_same_shape(const Func& o) const {
  if (shape_ != o.shape_) throw StructuralError("function shapes differ");
}

Func& Func::operator+=(const Func& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Func& Func::operator-=(const Func& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Func& Func::operator*=(const Scalar& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

Func pointwise_mul(const Func& f, const Func& g) {
  if (f.shape() != g.shape()) throw StructuralError("pointwise_mul: function shapes differ");
  Func out(f.shape());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

Func tensor_identify(const Func& f, const Func& g) {
  std::vector<int> shape = f.shape();
  shape.insert(shape.end(), g.shape().begin(), g.shape().end());
  Func out(std::move(shape));
  std::size_t k = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[k++] = f[i] * g[j];
  return out;
}

Func apply_to_legs(const Func& f, int first, int count,
                   const std::function<Func(const Func&)>& map) {
  const auto& shape = f.shape();
  if (first < 0 || count < 1 || first + count > f.rank())
    throw StructuralError("apply_to_legs: leg range out of bounds");
  std::vector<int> outer(shape.begin(), shape.begin() + first);
  std::vector<int> mid(shape.begin() + first, shape.begin() + first + count);
  std::vector<int> inner(shape.begin() + first + count, shape.end());
  const std::size_t n_outer = shape_product(outer);
  const std::size_t n_mid = shape_product(mid);
  const std::size_t n_inner = shape_product(inner);

  Func result;
  bool initialized = false;
  std::size_t n_out_mid = 0;
  Func slice(mid);
  for (std::size_t o = 0; o < n_outer; ++o)
    for (std::size_t i = 0; i < n_inner; ++i) {
      for (std::size_t m = 0; m < n_mid; ++m) slice[m] = f[(o * n_mid + m) * n_inner + i];
      Func image = map(slice);
      if (!initialized) {
        initialized = true;
        std::vector<int> out_shape = outer;
        out_shape.insert(out_shape.end(), image.shape().begin(), image.shape().end());
        out_shape.insert(out_shape.end(), inner.begin(), inner.end());
        result = Func(std::move(out_shape));
        n_out_mid = image.size();
      } else if (image.size() != n_out_mid) {
        throw StructuralError("apply_to_legs: map returned inconsistent shapes");
      }
      for (std::size_t m = 0; m < n_out_mid; ++m)
        result[(o * n_out_mid + m) * n_inner + i] = image[m];
    }
  return result;
}

Func multiply_legs(const Func& f, int i) {
  const auto& shape = f.shape();
  if (i < 0 || i + 1 >= f.rank() || shape[i] != shape[i + 1])
    throw StructuralError("multiply_legs: legs are not a matching pair");
  std::vector<int> out_shape = shape;
  out_shape.erase(out_shape.begin() + i + 1);
  Func out(out_shape);
  std::vector<int> idx(out_shape.size());
  std::vector<int> src(shape.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out.unflatten(k, idx);
    std::copy(idx.begin(), idx.begin() + i + 1, src.begin());
    src[i + 1] = idx[i];
    std::copy(idx.begin() + i + 1, idx.end(), src.begin() + i + 2);
    out[k] = f.at(src);
  }
  return out;
}

}  // namespace qpb
