#include "vnalg/slices.hpp"

#include <algorithm>
#include <map>

namespace vnalg {

// Slot numbering follows counterclockwise order around each node:
//   crossing  0 NE, 1 NW, 2 SW, 3 SE
//   join      0 S, 1 NE, 2 NW
//   fork      0 N, 1 SW, 2 SE
//   cap       0 SW, 1 SE
//   cup       0 NW, 1 NE
//   leg       0

int SliceBuilder::add_node(Kind kind, int degree, CrossType cross) {
  nodes_.push_back({kind, cross, degree});
  return static_cast<int>(nodes_.size()) - 1;
}

void SliceBuilder::check_pos(int pos, int span) const {
  if (pos < 0 || pos + span > width())
    throw DiagramError(DiagramError::Code::InvalidDiagram,
                       "slice position " + std::to_string(pos) + " out of range for width " +
                           std::to_string(width()));
}

void SliceBuilder::end_strand(int index, Port lower) {
  edges_.push_back({open_[index], lower, flows_[index]});
}

void SliceBuilder::cap(int pos, Flow left) {
  if (pos < 0 || pos > width())
    throw DiagramError(DiagramError::Code::InvalidDiagram, "cap position out of range");
  int n = add_node(Kind::Bend, 2);
  open_.insert(open_.begin() + pos, {Port{n, 0}, Port{n, 1}});
  flows_.insert(flows_.begin() + pos, {left, opposite(left)});
}

void SliceBuilder::cup(int pos) {
  check_pos(pos, 2);
  if (flows_[pos] == flows_[pos + 1])
    throw DiagramError(DiagramError::Code::InvalidDiagram, "cup on strands with equal flow");
  int n = add_node(Kind::Bend, 2);
  end_strand(pos, {n, 0});
  end_strand(pos + 1, {n, 1});
  open_.erase(open_.begin() + pos, open_.begin() + pos + 2);
  flows_.erase(flows_.begin() + pos, flows_.begin() + pos + 2);
}

void SliceBuilder::cross(int pos, CrossType type) {
  check_pos(pos, 2);
  int n = add_node(Kind::Crossing, 4, type);
  end_strand(pos, {n, 1});
  end_strand(pos + 1, {n, 0});
  open_[pos] = {n, 2};
  open_[pos + 1] = {n, 3};
  std::swap(flows_[pos], flows_[pos + 1]);
}

void SliceBuilder::join(int pos) {
  check_pos(pos, 2);
  if (flows_[pos] != flows_[pos + 1])
    throw DiagramError(DiagramError::Code::InvalidDiagram, "join on strands with opposite flow");
  int n = add_node(Kind::Vertex, 3);
  end_strand(pos, {n, 2});
  end_strand(pos + 1, {n, 1});
  open_[pos] = {n, 0};
  open_.erase(open_.begin() + pos + 1);
  flows_.erase(flows_.begin() + pos + 1);
}

void SliceBuilder::fork(int pos) {
  check_pos(pos, 1);
  int n = add_node(Kind::Vertex, 3);
  end_strand(pos, {n, 0});
  open_[pos] = {n, 1};
  open_.insert(open_.begin() + pos + 1, Port{n, 2});
  flows_.insert(flows_.begin() + pos + 1, flows_[pos]);
}

void SliceBuilder::leg_top(int pos, Flow f) {
  if (pos < 0 || pos > width())
    throw DiagramError(DiagramError::Code::InvalidDiagram, "leg position out of range");
  int n = add_node(Kind::Leg, 1);
  open_.insert(open_.begin() + pos, Port{n, 0});
  flows_.insert(flows_.begin() + pos, f);
}

void SliceBuilder::leg_bottom(int pos) {
  check_pos(pos, 1);
  int n = add_node(Kind::Leg, 1);
  end_strand(pos, {n, 0});
  open_.erase(open_.begin() + pos);
  flows_.erase(flows_.begin() + pos);
}

Diagram SliceBuilder::build(std::string name) const {
  if (!open_.empty())
    throw DiagramError(DiagramError::Code::InvalidDiagram,
                       std::to_string(open_.size()) + " strands left open");

  // Raw darts: 2e is the upper end of edge e, 2e + 1 the lower end.
  std::vector<std::vector<int>> at(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) at[i].assign(nodes_[i].degree, -1);
  std::vector<bool> incoming(2 * edges_.size());
  std::vector<Port> where(2 * edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const RawEdge& r = edges_[e];
    int up = static_cast<int>(2 * e), lo = up + 1;
    at[r.upper.node][r.upper.slot] = up;
    at[r.lower.node][r.lower.slot] = lo;
    where[up] = r.upper;
    where[lo] = r.lower;
    incoming[up] = r.flow == Flow::Up;
    incoming[lo] = r.flow == Flow::Down;
  }
  auto is_bend = [&](int raw) { return nodes_[where[raw].node].kind == Kind::Bend; };
  std::vector<bool> used(2 * edges_.size());
  // Follows a strand from a real dart through bends to the next real dart.
  auto far_end = [&](int raw) {
    int cur = raw;
    for (;;) {
      used[cur] = used[cur ^ 1] = true;
      cur ^= 1;
      if (!is_bend(cur)) return cur;
      const Port& p = where[cur];
      cur = at[p.node][1 - p.slot];
    }
  };

  // Final dart ids in order of (real node, counterclockwise slot).
  std::map<int, int> final_id;
  std::vector<int> real;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == Kind::Bend) continue;
    real.push_back(static_cast<int>(i));
    for (int raw : at[i]) final_id.emplace(raw, static_cast<int>(final_id.size()));
  }

  std::vector<Node> nodes;
  for (std::size_t k = 0; k < real.size(); ++k) {
    const RawNode& rn = nodes_[real[k]];
    const std::vector<int>& slots = at[real[k]];
    int start = 0;
    NodeKind kind = NodeKind::Leg;
    if (rn.kind == Kind::Crossing) {
      if (rn.cross == CrossType::Virtual) {
        start = incoming[slots[0]] ? 0 : 1;
        kind = NodeKind::CrossingVirtual;
      } else {
        int under = rn.cross == CrossType::OverLeft ? 0 : 1;
        start = incoming[slots[under]] ? under : under + 2;
        kind = incoming[slots[(start + 1) % 4]] ? NodeKind::CrossingNeg : NodeKind::CrossingPos;
      }
    } else if (rn.kind == Kind::Vertex) {
      kind = incoming[slots[0]] ? NodeKind::VertexTwoOutOneIn : NodeKind::VertexTwoInOneOut;
    }
    Node node{static_cast<int>(k), kind, {}};
    for (int j = 0; j < rn.degree; ++j)
      node.rotation.push_back(final_id.at(slots[(start + j) % rn.degree]));
    nodes.push_back(std::move(node));
  }

  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> by_id(final_id.begin(), final_id.end());
  std::ranges::sort(by_id, {}, &std::pair<int, int>::second);
  for (const auto& [raw, id] : by_id) {
    if (used[raw]) continue;
    int other = far_end(raw);
    int oid = final_id.at(other);
    edges.push_back({static_cast<int>(edges.size()), {id, oid}, incoming[raw] ? id : oid});
  }
  // Closed curves made only of bends become free loops.
  int next_dart = static_cast<int>(final_id.size());
  for (std::size_t raw = 0; raw < used.size(); ++raw) {
    if (used[raw]) continue;
    int cur = static_cast<int>(raw);
    do {
      used[cur] = used[cur ^ 1] = true;
      const Port& p = where[cur ^ 1];
      cur = at[p.node][1 - p.slot];
    } while (!used[cur]);
    edges.push_back({static_cast<int>(edges.size()), {next_dart, next_dart + 1}, next_dart + 1});
    next_dart += 2;
  }
  return Diagram(std::move(name), std::move(nodes), std::move(edges));
}

}  // namespace vnalg
