#include "qpb/calculus.hpp"

#include <string>

#include "qpb/error.hpp"
#include "qpb/spectral.hpp"

namespace qpb::calculus {

using bundle::Bundle;

Form::Form(int npoints, int degree, std::size_t max_entries) : npoints_(npoints), degree_(degree) {
  if (degree < 0 || degree > kMaxFormDegree)
    throw StructuralError("form degree " + std::to_string(degree) + " outside 0.." +
                          std::to_string(kMaxFormDegree));
  check_entry_cap(kernels::power(npoints, degree + 1), max_entries, "form");
  values_ = Func(tuple_shape(npoints, degree));
}

Form::Form(Func values) : values_(std::move(values)) {
  if (values_.rank() < 1) throw StructuralError("a form needs at least one argument");
  npoints_ = values_.shape()[0];
  for (int s : values_.shape())
    if (s != npoints_) throw StructuralError("form arguments range over different sets");
  degree_ = values_.rank() - 1;
  if (degree_ > kMaxFormDegree) throw StructuralError("form degree above maximum");
}

Form& Form::operator+=(const Form& o) {
  values_ += o.values_;
  return *this;
}

Form& Form::operator-=(const Form& o) {
  values_ -= o.values_;
  return *this;
}

Report validate_form(const Form& f) {
  std::vector<int> idx(f.degree() + 1);
  std::string witness;
  for (std::size_t t = 0; t < f.values().size() && witness.empty(); ++t) {
    if (f.values()[t].is_zero()) continue;
    f.values().unflatten(t, idx);
    for (int j = 0; j < f.degree(); ++j)
      if (idx[j] == idx[j + 1]) {
        witness = "(";
        for (int k = 0; k <= f.degree(); ++k) witness += (k ? "," : "") + std::to_string(idx[k]);
        witness += ")";
        break;
      }
  }
  Report r;
  r.add("adjacent_diagonals", witness.empty(), witness).with("degree", static_cast<long long>(f.degree()));
  return r;
}

Form concat_product(const Form& f, const Form& g, kernels::Exec exec) {
  if (f.npoints() != g.npoints()) throw StructuralError("concat_product: forms on different spaces");
  static const FiniteGroup trivial = FiniteGroup::cyclic(1);
  Form out(f.npoints(), f.degree() + g.degree());
  out.values().values() = kernels::star(f.npoints(), f.degree(), g.degree(), trivial,
                                        f.values().values(), g.values().values(), exec);
  return out;
}

Form differential(const Form& f, kernels::Exec exec) {
  Form out(f.npoints(), f.degree() + 1);
  out.values().values() =
      kernels::differential(f.npoints(), f.degree(), 1, f.values().values(), exec);
  return out;
}

Report check_d_squared(const Form& f, std::size_t max_entries) {
  const Form df = differential(f);
  const int n = f.npoints();
  const int len = f.degree() + 3;
  const std::size_t count = kernels::power(n, len);
  check_entry_cap(count, max_entries, "d^2 evaluation");
  std::vector<int> idx(len), face(len - 1);
  std::string witness;
  for (std::size_t t = 0; t < count && witness.empty(); ++t) {
    std::size_t rest = t;
    for (int k = len - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    Scalar value;
    for (int j = 0; j < len; ++j) {
      for (int k = 0, m = 0; k < len; ++k)
        if (k != j) face[m++] = idx[k];
      if (j % 2 == 0) value += df.values().at(face);
      else value -= df.values().at(face);
    }
    if (!value.is_zero()) {
      witness = "(";
      for (int k = 0; k < len; ++k) witness += (k ? "," : "") + std::to_string(idx[k]);
      witness += ")";
    }
  }
  Report r;
  r.add("d_squared_zero", witness.empty(), witness).with("degree", static_cast<long long>(f.degree()));
  return r;
}

Form lift_base_form(const Bundle& b, const Form& base_form) {
  if (base_form.npoints() != b.base_size())
    throw StructuralError("lift_base_form: form does not live on the base");
  Form out(b.total_size(), base_form.degree(), b.max_entries());
  std::vector<int> idx(base_form.degree() + 1);
  for (std::size_t t = 0; t < out.values().size(); ++t) {
    out.values().unflatten(t, idx);
    for (int& p : idx) p = b.project(p);
    out.values()[t] = base_form.values().at(idx);
  }
  return out;
}

Func canonical_map_forms(const Bundle& b, const Form& f1) {
  if (f1.degree() != 1 || f1.npoints() != b.total_size())
    throw StructuralError("canonical_map_forms expects a 1-form on P");
  return bundle::canonical_map(b, f1.values());
}

std::vector<std::vector<int>> nondegenerate_tuples(int npoints, int degree) {
  std::vector<std::vector<int>> out;
  const std::size_t count = kernels::power(npoints, degree + 1);
  std::vector<int> idx(degree + 1);
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t rest = t;
    for (int k = degree; k >= 0; --k) {
      idx[k] = static_cast<int>(rest % npoints);
      rest /= npoints;
    }
    bool ok = true;
    for (int j = 0; j < degree && ok; ++j) ok = idx[j] != idx[j + 1];
    if (ok) out.push_back(idx);
  }
  return out;
}

SubspaceBasis horizontal_basis(const Bundle& b) {
  const int n = b.total_size();
  const int nb = b.base_size();
  std::vector<Vector> generators;
  for (const auto& pair : nondegenerate_tuples(nb, 1)) {
    Form base_form(nb, 1);
    base_form.at({pair[0], pair[1]}) = 1;
    const Form lifted = lift_base_form(b, base_form);
    for (int p = 0; p < n; ++p) {
      const Form left = concat_product(Form::from_function(Func::indicator({n}, {p})), lifted);
      for (int q = 0; q < n; ++q) {
        Form g = concat_product(left, Form::from_function(Func::indicator({n}, {q})));
        if (!g.is_zero()) generators.push_back(std::move(g.values().values()));
      }
    }
  }
  return SubspaceBasis::span_of(n * n, generators);
}

bool horizontal_membership(const Bundle& b, const Form& f1) {
  if (f1.degree() != 1 || f1.npoints() != b.total_size())
    throw StructuralError("horizontal_membership expects a 1-form on P");
  return horizontal_basis(b).contains(f1.values().values());
}

SubspaceBasis strongly_horizontal_basis(const Bundle& b, int degree) {
  const int n = b.total_size();
  const int nb = b.base_size();
  std::vector<Vector> generators;
  for (const auto& tuple : nondegenerate_tuples(nb, degree)) {
    Form base_form(nb, degree);
    base_form.values().at(tuple) = 1;
    const Form lifted = lift_base_form(b, base_form);
    for (int q = 0; q < n; ++q) {
      Form g = concat_product(lifted, Form::from_function(Func::indicator({n}, {q})));
      if (!g.is_zero()) generators.push_back(std::move(g.values().values()));
    }
  }
  return SubspaceBasis::span_of(static_cast<int>(kernels::power(n, degree + 1)), generators);
}

bool strongly_horizontal_membership(const Bundle& b, const Form& f) {
  if (f.npoints() != b.total_size()) throw StructuralError("form does not live on P");
  if (f.is_zero()) return true;
  return strongly_horizontal_basis(b, f.degree()).contains(f.values().values());
}

SubspaceBasis canonical_map_kernel(const Bundle& b) {
  const int n = b.total_size();
  const RankKernel rk = rank_and_kernel(bundle::restricted_canonical_map_matrix(b));
  std::vector<Vector> embedded;
  for (const auto& v : rk.kernel.vectors()) {
    Vector w(static_cast<std::size_t>(n) * n);
    int k = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) w[p * n + q] = v[k++];
    embedded.push_back(std::move(w));
  }
  return SubspaceBasis::span_of(n * n, embedded);
}

Report check_exactness(const Bundle& b) {
  const Report freeness = bundle::check_freeness(b);
  if (!freeness.at("free").passed)
    throw PreconditionError("exactness check refused: action is not free, fixed point " +
                            freeness.at("free").witness);
  const int n = b.total_size();
  const int order = b.order();
  const int rank = rank_of(bundle::restricted_canonical_map_matrix(b));
  const SubspaceBasis kernel = canonical_map_kernel(b);
  const SubspaceBasis hor = horizontal_basis(b);

  std::string subset;
  for (std::size_t i = 0; i < hor.vectors().size() && subset.empty(); ++i) {
    Func f({n, n});
    f.values() = hor.vectors()[i];
    if (!canonical_map_forms(b, Form(f)).is_zero()) subset = "horizontal basis vector " + std::to_string(i);
  }

  Report r;
  r.add("restricted_map_surjective", rank == n * (order - 1))
      .with("omega1_dim", static_cast<long long>(n) * n - n)
      .with("rank", static_cast<long long>(rank))
      .with("target_dim", static_cast<long long>(n) * (order - 1))
      .with("kernel_dim", static_cast<long long>(kernel.dim()))
      .with("horizontal_dim", static_cast<long long>(hor.dim()));
  r.add("kernel_dim_count", kernel.dim() == n * n - n * order,
        "dim Ker = " + std::to_string(kernel.dim()) + ", expected N^2 - N|G| = " +
            std::to_string(n * n - n * order));
  r.add("horizontal_in_kernel", subset.empty(), subset);
  r.add("horizontal_equals_kernel", hor == kernel,
        "dim Gamma_hor = " + std::to_string(hor.dim()) + ", dim Ker = " + std::to_string(kernel.dim()));
  return r;
}

}  // namespace qpb::calculus
