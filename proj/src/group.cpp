#include "qpb/group.hpp"

#include <algorithm>
#include <numeric>

#include "qpb/error.hpp"

namespace qpb {

namespace {

std::string tuple_str(std::initializer_list<std::string> items) {
  std::string out = "(";
  bool first = true;
  for (const auto& s : items) {
    if (!first) out += ",";
    out += s;
    first = false;
  }
  return out + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul, int identity,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw StructuralError("group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.mul_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mul[i].size()) != n)
      throw StructuralError("group table row " + std::to_string(i) + " has length " +
                            std::to_string(mul[i].size()) + ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (mul[i][j] < 0 || mul[i][j] >= n)
        throw StructuralError("group table entry mul[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] out of range");
      g.mul_.push_back(mul[i][j]);
    }
  }
  if (identity < 0 || identity >= n) throw StructuralError("identity index out of range");
  g.identity_ = identity;
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == identity) {
        g.inv_[a] = b;
        break;
      }
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(a == identity ? "e" : std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n) {
    throw StructuralError("group labels: expected " + std::to_string(n) + " entries");
  }
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw StructuralError("cyclic group order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  std::vector<std::string> labels{"e"};
  for (int a = 1; a < n; ++a) labels.push_back(n == 2 ? "g" : "c" + std::to_string(a));
  return from_table(mul, 0, std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw StructuralError("symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<int> q(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      mul[a][b] = index_of(q);
    }
  std::vector<std::string> labels;
  for (const auto& perm : perms) {
    std::string s;
    for (int v : perm) s += std::to_string(v);
    labels.push_back(s);
  }
  labels[0] = "e";
  return from_table(mul, 0, std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order() * h.order();
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = "(" + g.label(a / h.order()) + "," + h.label(a % h.order()) + ")";
    for (int b = 0; b < n; ++b)
      mul[a][b] = g.mul(a / h.order(), b / h.order()) * h.order() +
                  h.mul(a % h.order(), b % h.order());
  }
  int id = g.identity() * h.order() + h.identity();
  labels[id] = "e";
  return from_table(mul, id, std::move(labels));
}

Report validate_group(const FiniteGroup& g) {
  Report r;
  const int n = g.order();
  auto L = [&](int a) { return g.label(a); };

  std::string witness;
  for (int a = 0; a < n && witness.empty(); ++a)
    for (int b = 0; b < n && witness.empty(); ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          witness = tuple_str({L(a), L(b), L(c)});
          break;
        }
  r.add("associativity", witness.empty(), witness).with("order", static_cast<long long>(n));

  witness.clear();
  const int e = g.identity();
  for (int a = 0; a < n && witness.empty(); ++a) {
    if (g.mul(e, a) != a) witness = tuple_str({L(e), L(a)});
    else if (g.mul(a, e) != a) witness = tuple_str({L(a), L(e)});
  }
  r.add("identity", witness.empty(), witness);

  witness.clear();
  for (int a = 0; a < n && witness.empty(); ++a) {
    int b = g.inv(a);
    if (b < 0 || g.mul(b, a) != e) witness = tuple_str({L(a)});
  }
  r.add("inverses", witness.empty(), witness);
  return r;
}

RightAction RightAction::from_table(const std::vector<std::vector<int>>& act, int group_order) {
  const int n = static_cast<int>(act.size());
  if (n == 0) throw StructuralError("action table is empty");
  RightAction ra;
  ra.size_ = n;
  ra.order_ = group_order;
  ra.act_.reserve(static_cast<std::size_t>(n) * group_order);
  for (int p = 0; p < n; ++p) {
    if (static_cast<int>(act[p].size()) != group_order)
      throw StructuralError("action table row " + std::to_string(p) + " has length " +
                            std::to_string(act[p].size()) + ", expected " +
                            std::to_string(group_order));
    for (int a = 0; a < group_order; ++a) {
      if (act[p][a] < 0 || act[p][a] >= n)
        throw StructuralError("index out of range at action[" + std::to_string(p) + "][" +
                              std::to_string(a) + "]");
      ra.act_.push_back(act[p][a]);
    }
  }
  return ra;
}

RightAction RightAction::right_multiplication(const FiniteGroup& g) {
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(g.order()));
  for (int p = 0; p < g.order(); ++p)
    for (int a = 0; a < g.order(); ++a) act[p][a] = g.mul(p, a);
  return from_table(act, g.order());
}

RightAction RightAction::trivial(int size, const FiniteGroup& g) {
  std::vector<std::vector<int>> act(size, std::vector<int>(g.order()));
  for (int p = 0; p < size; ++p) std::fill(act[p].begin(), act[p].end(), p);
  return from_table(act, g.order());
}

Report validate_action(const FiniteGroup& g, const RightAction& act) {
  if (act.group_order() != g.order())
    throw StructuralError("action table width " + std::to_string(act.group_order()) +
                          " does not match group order " + std::to_string(g.order()));
  Report r;
  const int n = act.size();
  const int e = g.identity();

  std::string witness;
  for (int p = 0; p < n; ++p)
    if (act.act(p, e) != p) {
      witness = tuple_str({std::to_string(p)});
      break;
    }
  r.add("unit", witness.empty(), witness);

  witness.clear();
  for (int p = 0; p < n && witness.empty(); ++p)
    for (int a = 0; a < g.order() && witness.empty(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (act.act(act.act(p, a), b) != act.act(p, g.mul(a, b))) {
          witness = tuple_str({std::to_string(p), g.label(a), g.label(b)});
          break;
        }
  r.add("compatibility", witness.empty(), witness);

  witness.clear();
  for (int p = 0; p < n && witness.empty(); ++p)
    for (int a = 0; a < g.order(); ++a)
      if (a != e && act.act(p, a) == p) {
        witness = tuple_str({std::to_string(p), g.label(a)});
        break;
      }
  r.add("free", witness.empty(), witness);
  return r;
}

}  // namespace qpb
