#include "vnalg/fixtures.hpp"

#include <stdexcept>

#include "vnalg/slices.hpp"

namespace vnalg::fixtures {

VirtualNAlgebra n3_algebra() {
  const std::vector<std::vector<std::vector<int>>> bracket{
      {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}},
      {{2, 3, 1}, {1, 2, 3}, {3, 1, 2}},
      {{3, 1, 2}, {2, 3, 1}, {1, 2, 3}},
  };
  auto t = TernaryTable::from_one_based(bracket);
  auto p = PartialProduct::from_one_based({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
  return {{t, t}, p};
}

VirtualNAlgebra n4_algebra() {
  auto h = TernaryTable::from_one_based({
      {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}},
      {{2, 1, 4, 3}, {1, 2, 3, 4}, {4, 3, 2, 1}, {3, 4, 1, 2}},
      {{3, 4, 1, 2}, {4, 3, 2, 1}, {1, 2, 3, 4}, {2, 1, 4, 3}},
      {{4, 3, 2, 1}, {3, 4, 1, 2}, {2, 1, 4, 3}, {1, 2, 3, 4}},
  });
  auto v = TernaryTable::from_one_based({
      {{1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}, {2, 3, 4, 1}},
      {{2, 3, 4, 1}, {1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}},
      {{3, 4, 1, 2}, {2, 3, 4, 1}, {1, 2, 3, 4}, {4, 1, 2, 3}},
      {{4, 1, 2, 3}, {3, 4, 1, 2}, {2, 3, 4, 1}, {1, 2, 3, 4}},
  });
  constexpr std::optional<int> u;
  auto p = PartialProduct::from_one_based({
      {3, u, u, 1},
      {u, 4, u, 3},
      {u, u, 1, 4},
      {4, 1, 3, 2},
  });
  return {{h, v}, p};
}

Diagram unknot() {
  SliceBuilder b;
  b.cap(0, Flow::Down);
  b.cup(0);
  return b.build("unknot");
}

Diagram one_kink_unknot() {
  SliceBuilder b;
  b.cap(0, Flow::Down);
  b.cap(1, Flow::Down);
  b.cross(0, CrossType::OverLeft);
  b.cup(1);
  b.cup(0);
  return b.build("one_kink_unknot");
}

Diagram strand_tangle() {
  SliceBuilder b;
  b.leg_top(0, Flow::Down);
  b.leg_bottom(0);
  return b.build("strand_tangle");
}

Diagram fig4_tangle() {
  SliceBuilder b;
  b.leg_top(0, Flow::Down);
  b.leg_top(1, Flow::Down);
  b.join(0);
  b.fork(0);
  b.leg_bottom(0);
  b.leg_bottom(0);
  return b.build("fig4_tangle");
}

Diagram fig5(char which) {
  SliceBuilder b;
  b.cap(0, Flow::Down);
  b.fork(0);
  switch (which) {
    case 'A':
      b.join(0);
      break;
    case 'B':
      b.cup(1);
      b.cap(1, Flow::Down);
      b.join(0);
      break;
    case 'C':
      b.cross(0, CrossType::OverLeft);
      b.join(0);
      break;
    case 'D':
      b.cross(0, CrossType::Virtual);
      b.join(0);
      break;
    default:
      throw std::out_of_range(std::string("no fig5 fixture ") + which);
  }
  b.cup(0);
  return b.build(std::string("fig5_") + which);
}

std::vector<std::string> diagram_names() {
  return {"unknot", "one_kink_unknot", "strand_tangle", "fig4_tangle",
          "fig5_A", "fig5_B", "fig5_C", "fig5_D"};
}

Diagram diagram(std::string_view name) {
  if (name == "unknot") return unknot();
  if (name == "one_kink_unknot") return one_kink_unknot();
  if (name == "strand_tangle") return strand_tangle();
  if (name == "fig4_tangle") return fig4_tangle();
  if (name.size() == 6 && name.substr(0, 5) == "fig5_" && name[5] >= 'A' && name[5] <= 'D')
    return fig5(name[5]);
  throw std::out_of_range("unknown diagram fixture " + std::string(name));
}

}  // namespace vnalg::fixtures
