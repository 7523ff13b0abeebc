#pragma once

#include "qpb/bundle.hpp"
#include "qpb/func.hpp"
#include "qpb/kernels.hpp"
#include "qpb/linalg.hpp"
#include "qpb/report.hpp"

namespace qpb::calculus {

/// A universal n-form: a function of n+1 points vanishing whenever two
/// adjacent arguments coincide. Forms over P and over the base B share this
/// type; `npoints` says which space the arguments range over.
class Form {
 public:
  Form() = default;
  Form(int npoints, int degree, std::size_t max_entries = kDefaultMaxEntries);
  /// Wraps a value table; degree is its rank minus one.
  explicit Form(Func values);
  /// A function viewed as a 0-form.
  static Form from_function(const Func& f) { return Form(f); }

  int npoints() const { return npoints_; }
  int degree() const { return degree_; }
  Func& values() { return values_; }
  const Func& values() const { return values_; }
  Scalar& at(std::initializer_list<int> idx) { return values_.at(idx); }
  const Scalar& at(std::initializer_list<int> idx) const { return values_.at(idx); }

  bool is_zero() const { return values_.is_zero(); }

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, Form a) {
    a.values_ *= s;
    return a;
  }
  friend bool operator==(const Form& a, const Form& b) { return a.values_ == b.values_; }

 private:
  int npoints_ = 0;
  int degree_ = 0;
  Func values_;
};

/// Adjacent-diagonal vanishing, with the first offending tuple as witness.
Report validate_form(const Form& f);

/// (F·G)(p_0..p_{n+m}) = F(p_0..p_n) G(p_n..p_{n+m}).
Form concat_product(const Form& f, const Form& g, kernels::Exec exec = kernels::Exec::parallel);

/// (dF)(p_0..p_{n+1}) = Σ_j (-1)^j F(p_0..p̂_j..p_{n+1}).
Form differential(const Form& f, kernels::Exec exec = kernels::Exec::parallel);

/// Checks d(dF) = 0 entry by entry. The outer differential is evaluated on
/// the fly, so a degree-2 F works although degree-4 tables are never stored.
/// The witness is the first tuple with a nonzero value.
Report check_d_squared(const Form& f, std::size_t max_entries = kDefaultMaxEntries);

/// ȷ(F̂)(p_0..p_n) = F̂(π(p_0)..π(p_n)).
Form lift_base_form(const bundle::Bundle& b, const Form& base_form);

/// (Δ_R1 F₁)(p; a) = F₁(p, p◁a), which vanishes at a = e.
Func canonical_map_forms(const bundle::Bundle& b, const Form& f1);

/// Γ¹_hor = P·Ω¹(B)·P as a subspace of C(P×P), spanned by all products
/// δ_p · ȷ(δ_{(x,x')}) · δ_q and echelon-reduced.
SubspaceBasis horizontal_basis(const bundle::Bundle& b);
bool horizontal_membership(const bundle::Bundle& b, const Form& f1);

/// Γⁿ_shor = ȷ(Ωⁿ(B))·P as a subspace of C(P^{n+1}).
SubspaceBasis strongly_horizontal_basis(const bundle::Bundle& b, int degree);
bool strongly_horizontal_membership(const bundle::Bundle& b, const Form& f);

/// Kernel of Δ_R1 restricted to Ω¹(P), embedded in C(P×P).
SubspaceBasis canonical_map_kernel(const bundle::Bundle& b);

/// Dimensions of the sequence 0 -> Γ¹_hor -> Ω¹(P) -> P⊗Ker ε -> 0 and the
/// verdicts Γ¹_hor ⊆ Ker Δ_R1 and Γ¹_hor = Ker Δ_R1. Throws
/// PreconditionError with a fixed-point witness if the action is not free.
Report check_exactness(const bundle::Bundle& b);

/// Tuples of `degree + 1` points in 0..npoints-1 with no two adjacent equal.
std::vector<std::vector<int>> nondegenerate_tuples(int npoints, int degree);

}  // namespace qpb::calculus
