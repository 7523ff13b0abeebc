#pragma once

#include <span>
#include <string>
#include <vector>

#include "qpb/report.hpp"

namespace qpb {

/// A finite group given by its Cayley table. Elements are indices
/// 0..order-1. Construction checks only the table shape; the group axioms
/// are checked by validate_group so that broken tables can be reported.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup from_table(const std::vector<std::vector<int>>& mul, int identity = 0,
                                std::vector<std::string> labels = {});
  static FiniteGroup cyclic(int n);
  /// Permutations of {0..n-1} in lexicographic order, (ab)(i) = a(b(i)).
  static FiniteGroup symmetric(int n);
  /// Pairs (a, b) indexed a * |H| + b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  /// Right inverse found in the table, or -1 if the row has no identity.
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const int> table() const { return mul_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.mul_ == b.mul_;
  }

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

/// Associativity, identity and inverse axioms, with a witness on failure.
Report validate_group(const FiniteGroup& g);

/// Right action table (p, a) -> p◁a on points 0..size-1.
class RightAction {
 public:
  RightAction() = default;

  static RightAction from_table(const std::vector<std::vector<int>>& act, int group_order);
  static RightAction right_multiplication(const FiniteGroup& g);
  static RightAction trivial(int size, const FiniteGroup& g);

  int size() const { return size_; }
  int group_order() const { return order_; }
  int act(int p, int a) const { return act_[static_cast<std::size_t>(p) * order_ + a]; }

  friend bool operator==(const RightAction& a, const RightAction& b) {
    return a.size_ == b.size_ && a.order_ == b.order_ && a.act_ == b.act_;
  }

 private:
  int size_ = 0;
  int order_ = 0;
  std::vector<int> act_;
};

/// Unit law, compatibility law and freeness of the action.
Report validate_action(const FiniteGroup& g, const RightAction& act);

}  // namespace qpb
