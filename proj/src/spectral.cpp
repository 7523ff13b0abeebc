#include "qpb/spectral.hpp"

#include <string>

#include "qpb/error.hpp"
#include "qpb/kernels.hpp"

namespace qpb {

std::vector<int> tuple_shape(int npoints, int degree) {
  return std::vector<int>(static_cast<std::size_t>(degree) + 1, npoints);
}

SpectralMap::SpectralMap(int npoints, int degree, int order, std::size_t max_entries)
    : npoints_(npoints), degree_(degree), order_(order) {
  if (degree < 0 || degree > kMaxFormDegree)
    throw StructuralError("form degree " + std::to_string(degree) + " outside 0.." +
                          std::to_string(kMaxFormDegree));
  check_entry_cap(kernels::power(npoints, degree + 1) * static_cast<std::size_t>(order),
                  max_entries, "spectral density");
  std::vector<int> shape = tuple_shape(npoints, degree);
  shape.push_back(order);
  density_ = Func(std::move(shape));
}

SpectralMap::SpectralMap(Func density) : density_(std::move(density)) {
  const auto& shape = density_.shape();
  if (shape.size() < 2) throw StructuralError("spectral density needs point legs and a group leg");
  npoints_ = shape[0];
  for (std::size_t k = 0; k + 1 < shape.size(); ++k)
    if (shape[k] != npoints_) throw StructuralError("spectral density point legs differ in size");
  degree_ = static_cast<int>(shape.size()) - 2;
  order_ = shape.back();
  if (degree_ > kMaxFormDegree) throw StructuralError("form degree above maximum");
}

Func SpectralMap::apply(const Func& alpha) const {
  if (alpha.shape() != std::vector<int>{order_})
    throw StructuralError("spectral map applied to a function of the wrong shape");
  Func out(tuple_shape(npoints_, degree_));
  for (std::size_t t = 0; t < out.size(); ++t)
    for (int c = 0; c < order_; ++c) out[t].add_product(density_[t * order_ + c], alpha[c]);
  return out;
}

Func SpectralMap::slice(int c) const {
  Func out(tuple_shape(npoints_, degree_));
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = density_[t * order_ + c];
  return out;
}

void SpectralMap::set_slice(int c, const Func& values) {
  if (values.size() != tuple_count()) throw StructuralError("slice has wrong size");
  for (std::size_t t = 0; t < values.size(); ++t) density_[t * order_ + c] = values[t];
}

SpectralMap& SpectralMap::operator+=(const SpectralMap& o) {
  density_ += o.density_;
  return *this;
}

SpectralMap& SpectralMap::operator-=(const SpectralMap& o) {
  density_ -= o.density_;
  return *this;
}

SpectralMap star_delta(const FiniteGroup& g, const SpectralMap& a, const SpectralMap& c,
                       kernels::Exec exec, std::size_t max_entries) {
  if (a.npoints() != c.npoints() || a.order() != g.order() || c.order() != g.order())
    throw StructuralError("star_delta: operands live on different spaces");
  SpectralMap out(a.npoints(), a.degree() + c.degree(), g.order(), max_entries);
  out.density().values() = kernels::star(a.npoints(), a.degree(), c.degree(), g,
                                         a.density().values(), c.density().values(), exec);
  return out;
}

SpectralMap differential(const SpectralMap& a, kernels::Exec exec, std::size_t max_entries) {
  SpectralMap out(a.npoints(), a.degree() + 1, a.order(), max_entries);
  out.density().values() =
      kernels::differential(a.npoints(), a.degree(), a.order(), a.density().values(), exec);
  return out;
}

}  // namespace qpb
