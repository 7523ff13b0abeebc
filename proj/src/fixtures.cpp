#include "qpb/fixtures.hpp"

namespace qpb::fixtures {

using bundle::Bundle;

namespace {

std::vector<std::vector<int>> z2_action() { return {{0, 2}, {1, 3}, {2, 0}, {3, 1}}; }

}  // namespace

Bundle z2() {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  return Bundle(g, RightAction::from_table(z2_action(), 2), std::vector<int>{0, 0, 1, 1});
}

Bundle s3() {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  std::vector<int> phi(g.order());
  for (int a = 0; a < g.order(); ++a) phi[a] = a;
  return Bundle(g, RightAction::right_multiplication(g), phi);
}

Bundle prod() { return bundle::make_product(2, FiniteGroup::cyclic(3)); }

Bundle nonfree() {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  return Bundle(g, RightAction::trivial(2, g));
}

Bundle corrupted_z2() {
  auto act = z2_action();
  act[0][0] = 1;
  return Bundle(FiniteGroup::cyclic(2), RightAction::from_table(act, 2));
}

connection::TransitionMap z2_transition() { return {2, {0, 1, 0, 0}}; }

}  // namespace qpb::fixtures
