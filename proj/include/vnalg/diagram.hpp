#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vnalg/errors.hpp"

namespace vnalg {

enum class NodeKind : std::uint8_t {
  CrossingPos,
  CrossingNeg,
  CrossingVirtual,
  VertexTwoInOneOut,
  VertexTwoOutOneIn,
  Leg,
};

std::string_view to_string(NodeKind k);
std::optional<NodeKind> parse_node_kind(std::string_view s);
bool is_crossing(NodeKind k);
bool is_vertex(NodeKind k);

/// A node and its darts in counterclockwise order. The first dart is
/// distinguished: the incoming under-strand dart at a classical crossing, an
/// incoming dart at a virtual crossing, the unpaired edge's dart at a
/// trivalent vertex.
struct Node {
  int id = 0;
  NodeKind kind = NodeKind::Leg;
  std::vector<int> rotation;

  friend bool operator==(const Node&, const Node&) = default;
};

/// An oriented edge joining two darts; `head` is the dart at the head end.
/// An edge whose darts lie in no rotation is a free loop (the unknot).
struct Edge {
  int id = 0;
  std::array<int, 2> darts{};
  int head = 0;

  int tail() const { return darts[0] == head ? darts[1] : darts[0]; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Per-dart lookups derived from a diagram.
struct DartInfo {
  int edge = -1;      // index into Diagram::edges
  int partner = -1;   // dart id at the other end of the edge
  int node = -1;      // index into Diagram::nodes, -1 on a free loop
  int position = -1;  // index in the node's rotation
  bool outgoing = false;
};

/// Planar combinatorial map of a virtual Y-oriented trivalent spatial graph
/// diagram. Nodes and edges are kept sorted by id.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::string name, std::vector<Node> nodes, std::vector<Edge> edges);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_dart(int dart) const { return darts_.contains(dart); }
  /// Throws DiagramError(InconsistentMap) for an unknown dart.
  const DartInfo& dart(int id) const;
  /// Node index for a node id, or -1.
  int node_index(int id) const;

  std::size_t leg_count() const;
  bool is_tangle() const { return leg_count() > 0; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.name_ == b.name_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<int, DartInfo> darts_;
  std::unordered_map<int, int> node_index_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Reports every violated structural invariant. Empty iff valid.
ValidationReport validate(const Diagram& d);

struct Face {
  int id = 0;
  std::vector<int> boundary;  // darts whose left side is this face, in walk order
  bool outer = false;         // unbounded face (closed) or boundary region (tangle)
};

/// The regions of the planar complement. The successor of a dart is the
/// clockwise neighbour of its partner, so each walk traces the face on the
/// left of its darts. For tangles the walk through the legs is cut at every
/// leg into one boundary region per gap between consecutive legs.
///
/// Face ids are assigned in order of each face's smallest dart id. For
/// closed diagrams the face with the longest boundary (lowest id on ties) is
/// marked outer. Throws DiagramError(InconsistentMap) if validation fails.
std::vector<Face> faces(const Diagram& d);

/// Face id on the left of every dart, computed alongside faces().
struct FaceMap {
  std::vector<Face> faces;
  std::unordered_map<int, int> left_of;  // dart id -> face id
};
FaceMap face_map(const Diagram& d);

enum class ConstraintKind { HorizontalBracket, VerticalBracket, Product };

/// Roles at one node: a, b, c, d for brackets ([a,b,c] = d or <a,b,c> = d),
/// a, b, ab for products (roles[3] unused, -1). Entries are face ids and may
/// repeat when a loop edge returns to the node (e.g. a kink).
struct LocalConstraint {
  int node = 0;
  ConstraintKind kind = ConstraintKind::Product;
  std::array<int, 4> roles{-1, -1, -1, -1};

  int arity() const { return kind == ConstraintKind::Product ? 3 : 4; }
  friend bool operator==(const LocalConstraint&, const LocalConstraint&) = default;
};

/// Role assignment at `node_id`.
///
/// Vertices: facing along the unpaired edge, ab is the face between the two
/// paired edges, a the face on the right, b the face on the left.
///
/// Crossings: rotate the picture so the tails sector (between the two
/// incoming strands) is on top. Then a is the left sector and c the right
/// one. At virtual and positive crossings b is the tails sector and d the
/// heads sector; at negative crossings the two are exchanged.
///
/// Throws DiagramError(LegNode) for a leg.
LocalConstraint local_constraint(const Diagram& d, const FaceMap& fm, int node_id);
LocalConstraint local_constraint(const Diagram& d, int node_id);

/// Constraints for every non-leg node in node order.
std::vector<LocalConstraint> local_constraints(const Diagram& d, const FaceMap& fm);

}  // namespace vnalg
