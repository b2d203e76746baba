#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "vnalg/diagram.hpp"
#include "vnalg/fixtures.hpp"
#include "vnalg/moves.hpp"
#include "vnalg/slices.hpp"

using namespace vnalg;

namespace {

bool mentions(const ValidationReport& r, const std::string& text) {
  return std::ranges::any_of(r.problems, [&](const auto& p) { return p.find(text) != std::string::npos; });
}

Diagram rebuilt(const Diagram& d, std::vector<Node> nodes, std::vector<Edge> edges) {
  return Diagram(d.name(), std::move(nodes), std::move(edges));
}

const Node& first_node(const Diagram& d, NodeKind kind) {
  auto it = std::ranges::find_if(d.nodes(), [&](const Node& n) { return n.kind == kind; });
  REQUIRE(it != d.nodes().end());
  return *it;
}

std::vector<Diagram> closed_fixtures() {
  std::vector<Diagram> out{fixtures::unknot(), fixtures::one_kink_unknot()};
  for (char c : {'A', 'B', 'C', 'D'}) out.push_back(fixtures::fig5(c));
  return out;
}

std::vector<Diagram> sample_diagrams() {
  auto out = closed_fixtures();
  out.push_back(fixtures::strand_tangle());
  out.push_back(fixtures::fig4_tangle());
  for (std::uint64_t seed = 0; seed < 200; ++seed) out.push_back(random_closed_diagram(seed));
  for (Move m : all_moves())
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto p = move_pair(m, seed);
      out.push_back(p.before);
      out.push_back(p.after);
    }
  return out;
}

}  // namespace

TEST_CASE("node kind names") {
  for (NodeKind k : {NodeKind::CrossingPos, NodeKind::CrossingNeg, NodeKind::CrossingVirtual,
                     NodeKind::VertexTwoInOneOut, NodeKind::VertexTwoOutOneIn, NodeKind::Leg})
    CHECK(parse_node_kind(to_string(k)) == k);
  CHECK(to_string(NodeKind::VertexTwoInOneOut) == "VERTEX_TWO_IN_ONE_OUT");
  CHECK_FALSE(parse_node_kind("CROSSING").has_value());
  CHECK(is_crossing(NodeKind::CrossingVirtual));
  CHECK_FALSE(is_crossing(NodeKind::Leg));
  CHECK(is_vertex(NodeKind::VertexTwoOutOneIn));
}

TEST_CASE("fixtures validate") {
  for (const auto& name : fixtures::diagram_names()) {
    CAPTURE(name);
    auto r = validate(fixtures::diagram(name));
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(fixtures::diagram("trefoil"), std::out_of_range);
  CHECK(fixtures::fig4_tangle().leg_count() == 4);
  CHECK(fixtures::fig4_tangle().is_tangle());
  CHECK_FALSE(fixtures::fig5('A').is_tangle());
}

TEST_CASE("face counts of small fixtures") {
  CHECK(faces(fixtures::unknot()).size() == 2);
  auto kink = fixtures::one_kink_unknot();
  CHECK(kink.nodes().size() == 1);
  CHECK(kink.edges().size() == 2);
  CHECK(faces(kink).size() == 3);
  auto strand = faces(fixtures::strand_tangle());
  CHECK(strand.size() == 2);
  CHECK(std::ranges::all_of(strand, &Face::outer));
}

TEST_CASE("validate reports a sink vertex") {
  auto d = fixtures::fig5('A');
  const Node& v = first_node(d, NodeKind::VertexTwoInOneOut);
  const int unpaired = v.rotation[0];
  auto edges = d.edges();
  for (auto& e : edges)
    if (e.head != unpaired && (e.darts[0] == unpaired || e.darts[1] == unpaired)) e.head = unpaired;
  auto r = validate(rebuilt(d, d.nodes(), edges));
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "sink vertex"));
}

TEST_CASE("validate reports structural damage") {
  auto d = fixtures::fig5('C');
  SUBCASE("dart missing from every rotation") {
    auto nodes = d.nodes();
    nodes[0].rotation.pop_back();
    CHECK_FALSE(validate(rebuilt(d, nodes, d.edges())).ok());
  }
  SUBCASE("duplicate node id") {
    auto nodes = d.nodes();
    nodes[1].id = nodes[0].id;
    CHECK(mentions(validate(rebuilt(d, nodes, d.edges())), "duplicate node id"));
  }
  SUBCASE("crossing sign disagrees with kind") {
    auto nodes = d.nodes();
    for (auto& n : nodes)
      if (n.kind == NodeKind::CrossingPos) n.kind = NodeKind::CrossingNeg;
      else if (n.kind == NodeKind::CrossingNeg) n.kind = NodeKind::CrossingPos;
    CHECK_FALSE(validate(rebuilt(d, nodes, d.edges())).ok());
  }
  SUBCASE("mirror image is not planar") {
    auto nodes = d.nodes();
    for (auto& n : nodes)
      if (n.id == first_node(d, NodeKind::VertexTwoInOneOut).id) std::swap(n.rotation[1], n.rotation[2]);
    CHECK(mentions(validate(rebuilt(d, nodes, d.edges())), "Euler"));
  }
  SUBCASE("disconnected union") {
    auto nodes = d.nodes();
    auto edges = d.edges();
    const int shift = 1000;
    edges.push_back(Edge{shift, {shift, shift + 1}, shift + 1});
    CHECK(mentions(validate(rebuilt(d, nodes, edges)), "not connected"));
  }
}

TEST_CASE("faces of an invalid diagram throw") {
  auto d = fixtures::fig5('A');
  auto nodes = d.nodes();
  nodes[0].rotation.pop_back();
  auto broken = rebuilt(d, nodes, d.edges());
  try {
    faces(broken);
    FAIL("expected DiagramError");
  } catch (const DiagramError& e) {
    CHECK(e.code() == DiagramError::Code::InconsistentMap);
  }
  CHECK_THROWS_AS(d.dart(-5), DiagramError);
  CHECK(d.node_index(-5) == -1);
}

TEST_CASE("slice builder rejects impossible slices") {
  SliceBuilder b;
  b.cap(0, Flow::Down);
  CHECK_THROWS_AS(b.join(0), DiagramError);
  CHECK_THROWS_AS(b.cup(1), DiagramError);
  CHECK_THROWS_AS(b.build("open"), DiagramError);
  b.cup(0);
  CHECK(b.width() == 0);
  CHECK(validate(b.build("closed")).ok());
}

TEST_CASE("local constraint kinds") {
  auto c = fixtures::fig5('C');
  auto d = fixtures::fig5('D');
  for (const auto& n : c.nodes())
    if (is_crossing(n.kind)) CHECK(local_constraint(c, n.id).kind == ConstraintKind::HorizontalBracket);
  for (const auto& n : d.nodes()) {
    auto lc = local_constraint(d, n.id);
    if (n.kind == NodeKind::CrossingVirtual) CHECK(lc.kind == ConstraintKind::VerticalBracket);
    if (is_vertex(n.kind)) {
      CHECK(lc.kind == ConstraintKind::Product);
      CHECK(lc.arity() == 3);
      CHECK(lc.roles[3] == -1);
    }
  }
  auto tangle = fixtures::strand_tangle();
  try {
    local_constraint(tangle, tangle.nodes()[0].id);
    FAIL("expected DiagramError");
  } catch (const DiagramError& e) {
    CHECK(e.code() == DiagramError::Code::LegNode);
  }
}

TEST_CASE("vertex roles in the two-vertex tangle") {
  // The join vertex: two strands enter from above and leave downward. Facing
  // along the outgoing edge, a is the region on the right (west in the
  // picture), b the one on the left (east), ab the region between the inputs.
  auto d = fixtures::fig4_tangle();
  auto fm = face_map(d);
  const Node& join = first_node(d, NodeKind::VertexTwoInOneOut);
  auto lc = local_constraint(d, fm, join.id);
  std::set<int> roles{lc.roles[0], lc.roles[1], lc.roles[2]};
  CHECK(roles.size() == 3);
  auto left = [&](int dart) { return fm.left_of.at(dart); };
  // Counterclockwise from the outgoing dart: east sector, north sector, west sector.
  CHECK(lc.roles[2] == left(join.rotation[1]));
  CHECK(lc.roles[1] == left(join.rotation[0]));
  CHECK(lc.roles[0] == left(join.rotation[2]));
}

TEST_CASE("property: crossing roles follow the tails sector") {
  for (const auto& d : sample_diagrams()) {
    auto fm = face_map(d);
    for (const auto& n : d.nodes()) {
      if (!is_crossing(n.kind)) continue;
      auto in = [&](int k) { return !d.dart(n.rotation[static_cast<std::size_t>(k % 4)]).outgoing; };
      int k = 0;
      while (!(in(k) && in(k + 1))) ++k;
      auto sector = [&](int i) { return fm.left_of.at(n.rotation[static_cast<std::size_t>(i % 4)]); };
      auto lc = local_constraint(d, fm, n.id);
      const bool neg = n.kind == NodeKind::CrossingNeg;
      CHECK(lc.roles[0] == sector(k + 1));
      CHECK(lc.roles[2] == sector(k + 3));
      CHECK(lc.roles[1] == sector(neg ? k + 2 : k));
      CHECK(lc.roles[3] == sector(neg ? k : k + 2));
    }
  }
}

TEST_CASE("property: role faces are the incident faces") {
  for (const auto& d : sample_diagrams()) {
    auto fm = face_map(d);
    for (const auto& lc : local_constraints(d, fm)) {
      const Node& n = d.nodes()[static_cast<std::size_t>(d.node_index(lc.node))];
      std::multiset<int> incident, roles;
      for (int dart : n.rotation) incident.insert(fm.left_of.at(dart));
      for (int i = 0; i < lc.arity(); ++i) roles.insert(lc.roles[static_cast<std::size_t>(i)]);
      CHECK(incident == roles);
    }
  }
}

TEST_CASE("role faces are distinct in the two-vertex fixtures") {
  for (const auto& d : {fixtures::fig4_tangle(), fixtures::fig5('A'), fixtures::fig5('C'), fixtures::fig5('D')}) {
    auto fm = face_map(d);
    for (const auto& lc : local_constraints(d, fm)) {
      std::set<int> roles(lc.roles.begin(), lc.roles.begin() + lc.arity());
      CHECK(static_cast<int>(roles.size()) == lc.arity());
    }
  }
}

TEST_CASE("property: faces partition the darts") {
  for (const auto& d : sample_diagrams()) {
    auto fm = face_map(d);
    std::map<int, int> seen;
    for (const auto& f : fm.faces)
      for (int dart : f.boundary) ++seen[dart];
    std::size_t darts = 0;
    for (const auto& e : d.edges()) {
      darts += 2;
      for (int dart : e.darts) {
        const bool loose = d.dart(dart).node < 0;
        if (!loose) CHECK(seen[dart] == 1);
      }
    }
    for (std::size_t i = 0; i < fm.faces.size(); ++i) CHECK(fm.faces[i].id == static_cast<int>(i));
    if (!d.is_tangle())
      CHECK(std::ranges::count_if(fm.faces, [](const Face& f) { return f.outer; }) == 1);
  }
}

TEST_CASE("property: boundary legs lie on outer regions") {
  for (const auto& d : {fixtures::strand_tangle(), fixtures::fig4_tangle()}) {
    auto fm = face_map(d);
    for (const auto& n : d.nodes())
      if (n.kind == NodeKind::Leg) CHECK(fm.faces[static_cast<std::size_t>(fm.left_of.at(n.rotation[0]))].outer);
  }
}

TEST_CASE("property: faces agree with the corner-merging oracle") {
  for (const auto& d : sample_diagrams()) {
    if (d.is_tangle()) continue;
    auto fm = face_map(d);
    auto oc = oracle::corner_faces(d);
    CAPTURE(d.name());
    CHECK(static_cast<int>(fm.faces.size()) == oc.count);
    std::map<int, int> pairing;
    for (const auto& [dart, root] : oc.left) {
      auto [it, fresh] = pairing.emplace(root, fm.left_of.at(dart));
      CHECK(it->second == fm.left_of.at(dart));
    }
    std::set<int> distinct;
    for (const auto& [root, face] : pairing) distinct.insert(face);
    CHECK(distinct.size() == pairing.size());
  }
}

TEST_CASE("property: Euler's formula on closed diagrams") {
  int checked = 0;
  for (const auto& d : sample_diagrams()) {
    if (d.is_tangle() || d.nodes().empty()) continue;
    const auto v = static_cast<long>(d.nodes().size());
    const auto e = static_cast<long>(d.edges().size());
    const auto f = static_cast<long>(faces(d).size());
    CHECK(v - e + f == 2);
    ++checked;
  }
  CHECK(checked >= 200);
}
