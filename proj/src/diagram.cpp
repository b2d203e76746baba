#include "vnalg/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace vnalg {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 6> kKindNames{{
    {NodeKind::CrossingPos, "CROSSING_POS"},
    {NodeKind::CrossingNeg, "CROSSING_NEG"},
    {NodeKind::CrossingVirtual, "CROSSING_VIRTUAL"},
    {NodeKind::VertexTwoInOneOut, "VERTEX_TWO_IN_ONE_OUT"},
    {NodeKind::VertexTwoOutOneIn, "VERTEX_TWO_OUT_ONE_IN"},
    {NodeKind::Leg, "LEG"},
}};

std::size_t expected_degree(NodeKind k) {
  if (is_crossing(k)) return 4;
  if (is_vertex(k)) return 3;
  return 1;
}

std::string node_label(const Node& n) { return "node " + std::to_string(n.id); }

}  // namespace

std::string_view to_string(NodeKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

bool is_crossing(NodeKind k) {
  return k == NodeKind::CrossingPos || k == NodeKind::CrossingNeg ||
         k == NodeKind::CrossingVirtual;
}

bool is_vertex(NodeKind k) {
  return k == NodeKind::VertexTwoInOneOut || k == NodeKind::VertexTwoOutOneIn;
}

Diagram::Diagram(std::string name, std::vector<Node> nodes, std::vector<Edge> edges)
    : name_(std::move(name)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::ranges::sort(nodes_, {}, &Node::id);
  std::ranges::sort(edges_, {}, &Edge::id);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    for (int side = 0; side < 2; ++side) {
      DartInfo info;
      info.edge = static_cast<int>(e);
      info.partner = edge.darts[1 - side];
      info.outgoing = edge.darts[side] != edge.head;
      darts_.try_emplace(edge.darts[side], info);
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    node_index_.try_emplace(nodes_[i].id, static_cast<int>(i));
    const auto& rot = nodes_[i].rotation;
    for (std::size_t p = 0; p < rot.size(); ++p) {
      auto it = darts_.find(rot[p]);
      if (it != darts_.end() && it->second.node < 0) {
        it->second.node = static_cast<int>(i);
        it->second.position = static_cast<int>(p);
      }
    }
  }
}

const DartInfo& Diagram::dart(int id) const {
  auto it = darts_.find(id);
  if (it == darts_.end())
    throw DiagramError(DiagramError::Code::InconsistentMap, "unknown dart " + std::to_string(id));
  return it->second;
}

int Diagram::node_index(int id) const {
  auto it = node_index_.find(id);
  return it == node_index_.end() ? -1 : it->second;
}

std::size_t Diagram::leg_count() const {
  return static_cast<std::size_t>(
      std::ranges::count(nodes_, NodeKind::Leg, &Node::kind));
}

namespace {

/// Raw face walks of a structurally valid diagram, before splitting at legs.
std::vector<std::vector<int>> trace_walks(const Diagram& d) {
  std::vector<int> all;
  for (const Edge& e : d.edges()) all.insert(all.end(), e.darts.begin(), e.darts.end());
  std::ranges::sort(all);

  auto next = [&](int dart) {
    const DartInfo& p = d.dart(d.dart(dart).partner);
    if (p.node < 0) return dart;  // free loop: each side is its own face
    const auto& rot = d.nodes()[p.node].rotation;
    int k = static_cast<int>(rot.size());
    return rot[(p.position + k - 1) % k];
  };

  std::set<int> seen;
  std::vector<std::vector<int>> walks;
  for (int start : all) {
    if (seen.contains(start)) continue;
    std::vector<int> walk;
    int cur = start;
    do {
      if (!seen.insert(cur).second)
        throw DiagramError(DiagramError::Code::InconsistentMap,
                           "face tracing revisits dart " + std::to_string(cur));
      walk.push_back(cur);
      cur = next(cur);
    } while (cur != start);
    walks.push_back(std::move(walk));
  }
  return walks;
}

bool is_leg_dart(const Diagram& d, int dart) {
  const DartInfo& info = d.dart(dart);
  return info.node >= 0 && d.nodes()[info.node].kind == NodeKind::Leg;
}

}  // namespace

ValidationReport validate(const Diagram& d) {
  ValidationReport r;
  auto problem = [&](std::string s) { r.problems.push_back(std::move(s)); };

  // Ids and edge pairing.
  std::set<int> node_ids, edge_ids, dart_ids;
  for (const Node& n : d.nodes())
    if (!node_ids.insert(n.id).second) problem("duplicate node id " + std::to_string(n.id));
  for (const Edge& e : d.edges()) {
    std::string el = "edge " + std::to_string(e.id);
    if (!edge_ids.insert(e.id).second) problem("duplicate edge id " + std::to_string(e.id));
    if (e.darts[0] == e.darts[1]) problem(el + ": both darts are " + std::to_string(e.darts[0]));
    if (e.head != e.darts[0] && e.head != e.darts[1])
      problem(el + ": head " + std::to_string(e.head) + " is not one of its darts");
    for (int dt : e.darts)
      if (!dart_ids.insert(dt).second) problem("dart " + std::to_string(dt) + " is on two edges");
  }

  // Rotation system.
  std::map<int, int> occurrences;
  for (const Node& n : d.nodes()) {
    if (n.rotation.size() != expected_degree(n.kind))
      problem(node_label(n) + ": " + std::string(to_string(n.kind)) + " needs " +
              std::to_string(expected_degree(n.kind)) + " darts, has " +
              std::to_string(n.rotation.size()));
    for (int dt : n.rotation) {
      if (!dart_ids.contains(dt)) problem(node_label(n) + ": dart " + std::to_string(dt) + " is on no edge");
      ++occurrences[dt];
    }
  }
  for (auto [dt, count] : occurrences)
    if (count > 1) problem("dart " + std::to_string(dt) + " appears in " + std::to_string(count) + " rotations");
  std::size_t free_loops = 0;
  for (const Edge& e : d.edges()) {
    bool a = occurrences.contains(e.darts[0]), b = occurrences.contains(e.darts[1]);
    if (a != b) problem("edge " + std::to_string(e.id) + ": only one dart is attached to a node");
    if (!a && !b) ++free_loops;
  }
  if (!r.ok()) return r;

  // Orientation at each node.
  auto out = [&](int dt) { return d.dart(dt).outgoing; };
  for (const Node& n : d.nodes()) {
    const auto& rot = n.rotation;
    if (is_crossing(n.kind)) {
      if (out(rot[0])) problem(node_label(n) + ": first dart must be incoming");
      if (out(rot[0]) == out(rot[2]) || out(rot[1]) == out(rot[3])) {
        problem(node_label(n) + ": a strand reverses through the crossing");
        continue;
      }
      if (n.kind != NodeKind::CrossingVirtual) {
        bool pos = out(rot[1]);
        if (pos != (n.kind == NodeKind::CrossingPos))
          problem(node_label(n) + ": kind " + std::string(to_string(n.kind)) +
                  " does not match strand orientations");
      }
    } else if (is_vertex(n.kind)) {
      int outs = out(rot[0]) + out(rot[1]) + out(rot[2]);
      if (outs == 0) {
        problem(node_label(n) + ": sink vertex");
      } else if (outs == 3) {
        problem(node_label(n) + ": source vertex");
      } else {
        bool in_out = n.kind == NodeKind::VertexTwoInOneOut;
        if (out(rot[0]) != in_out || out(rot[1]) == in_out || out(rot[2]) == in_out)
          problem(node_label(n) + ": kind " + std::string(to_string(n.kind)) +
                  " does not match edge orientations (first dart must be the unpaired edge)");
      }
    }
  }

  // Connectivity.
  std::vector<int> parent(d.nodes().size() + d.edges().size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int offset = static_cast<int>(d.nodes().size());
  for (std::size_t e = 0; e < d.edges().size(); ++e)
    for (int dt : d.edges()[e].darts) {
      int node = d.dart(dt).node;
      if (node >= 0) parent[find(offset + static_cast<int>(e))] = find(node);
    }
  std::set<int> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
  if (roots.size() > 1) problem("diagram is not connected (" + std::to_string(roots.size()) + " components)");
  if (!r.ok()) return r;

  // Planarity certificate, counting a free loop as one vertex on one edge.
  long v = static_cast<long>(d.nodes().size() + free_loops);
  long e = static_cast<long>(d.edges().size());
  long f = static_cast<long>(trace_walks(d).size());
  if (e > 0 && v - e + f != 2)
    problem("Euler characteristic V - E + F = " + std::to_string(v - e + f) + ", expected 2");
  return r;
}

FaceMap face_map(const Diagram& d) {
  ValidationReport report = validate(d);
  if (!report.ok())
    throw DiagramError(DiagramError::Code::InconsistentMap, "invalid diagram: " + report.problems.front());

  std::vector<std::vector<int>> regions;
  std::vector<bool> boundary;
  for (auto& walk : trace_walks(d)) {
    auto first_leg = std::ranges::find_if(walk, [&](int dt) { return is_leg_dart(d, dt); });
    if (first_leg == walk.end()) {
      regions.push_back(std::move(walk));
      boundary.push_back(false);
      continue;
    }
    std::ranges::rotate(walk, first_leg);
    std::vector<int> cur;
    for (int dt : walk) {
      if (is_leg_dart(d, dt) && !cur.empty()) {
        regions.push_back(std::move(cur));
        boundary.push_back(true);
        cur.clear();
      }
      cur.push_back(dt);
    }
    regions.push_back(std::move(cur));
    boundary.push_back(true);
  }

  std::vector<std::size_t> order(regions.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::sort(order, {}, [&](std::size_t i) { return std::ranges::min(regions[i]); });

  FaceMap fm;
  for (std::size_t i : order) {
    Face f;
    f.id = static_cast<int>(fm.faces.size());
    f.outer = boundary[i];
    f.boundary = std::move(regions[i]);
    for (int dt : f.boundary) fm.left_of[dt] = f.id;
    fm.faces.push_back(std::move(f));
  }
  if (!d.is_tangle() && !fm.faces.empty()) {
    auto outer = std::ranges::max_element(fm.faces, [](const Face& a, const Face& b) {
      return a.boundary.size() < b.boundary.size() ||
             (a.boundary.size() == b.boundary.size() && a.id > b.id);
    });
    outer->outer = true;
  }
  return fm;
}

std::vector<Face> faces(const Diagram& d) { return face_map(d).faces; }

LocalConstraint local_constraint(const Diagram& d, const FaceMap& fm, int node_id) {
  int index = d.node_index(node_id);
  if (index < 0)
    throw DiagramError(DiagramError::Code::InconsistentMap, "unknown node " + std::to_string(node_id));
  const Node& n = d.nodes()[index];
  if (n.kind == NodeKind::Leg)
    throw DiagramError(DiagramError::Code::LegNode, "node " + std::to_string(node_id) + " is a leg");

  // sector[i] lies between rotation[i] and rotation[i+1].
  std::vector<int> sector;
  for (int dt : n.rotation) sector.push_back(fm.left_of.at(dt));

  LocalConstraint lc;
  lc.node = node_id;
  if (is_vertex(n.kind)) {
    lc.kind = ConstraintKind::Product;
    int a = sector[2], b = sector[0];
    if (n.kind == NodeKind::VertexTwoOutOneIn) std::swap(a, b);
    lc.roles = {a, b, sector[1], -1};
    return lc;
  }

  // Tails sector: between the two incoming darts.
  int k = d.dart(n.rotation[1]).outgoing ? 3 : 0;
  int tails = sector[k], heads = sector[(k + 2) % 4];
  int left = sector[(k + 1) % 4], right = sector[(k + 3) % 4];
  if (n.kind == NodeKind::CrossingNeg) std::swap(tails, heads);
  lc.kind = n.kind == NodeKind::CrossingVirtual ? ConstraintKind::VerticalBracket
                                                : ConstraintKind::HorizontalBracket;
  lc.roles = {left, tails, right, heads};
  return lc;
}

LocalConstraint local_constraint(const Diagram& d, int node_id) {
  return local_constraint(d, face_map(d), node_id);
}

std::vector<LocalConstraint> local_constraints(const Diagram& d, const FaceMap& fm) {
  std::vector<LocalConstraint> out;
  for (const Node& n : d.nodes())
    if (n.kind != NodeKind::Leg) out.push_back(local_constraint(d, fm, n.id));
  return out;
}

}  // namespace vnalg
