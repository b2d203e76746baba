#pragma once

#include <string>
#include <vector>

#include "vnalg/diagram.hpp"

namespace vnalg {

/// Direction of a strand crossing a horizontal level.
enum class Flow { Down, Up };

inline Flow opposite(Flow f) { return f == Flow::Down ? Flow::Up : Flow::Down; }

enum class CrossType { OverLeft, OverRight, Virtual };

/// Builds diagrams top to bottom as a stack of elementary slices acting on a
/// row of open strands. Positions count strands from the left. The result is
/// planar by construction.
class SliceBuilder {
 public:
  /// Opens two strands at `pos` and `pos + 1`; the left one has flow `left`.
  void cap(int pos, Flow left);
  /// Closes strands `pos` and `pos + 1`, which must have opposite flows.
  void cup(int pos);
  /// Strands `pos` and `pos + 1` exchange places. OverLeft puts the strand
  /// arriving from the left on top.
  void cross(int pos, CrossType type);
  /// Merges strands `pos` and `pos + 1` (equal flows) into one at `pos`.
  void join(int pos);
  /// Splits strand `pos` into two.
  void fork(int pos);
  /// Opens a strand at `pos` that starts at a boundary leg.
  void leg_top(int pos, Flow f);
  /// Ends strand `pos` at a boundary leg.
  void leg_bottom(int pos);

  const std::vector<Flow>& flows() const { return flows_; }
  int width() const { return static_cast<int>(flows_.size()); }

  /// Converts the slices into a rotation-system diagram. Degree-two bends
  /// are contracted and ids renumbered from 0. Throws DiagramError
  /// (InvalidDiagram) if strands remain open.
  Diagram build(std::string name) const;

 private:
  struct Port {
    int node;
    int slot;
  };
  enum class Kind { Bend, Crossing, Vertex, Leg };
  struct RawNode {
    Kind kind;
    CrossType cross = CrossType::Virtual;
    int degree;
  };
  struct RawEdge {
    Port upper;
    Port lower;
    Flow flow;
  };

  int add_node(Kind kind, int degree, CrossType cross = CrossType::Virtual);
  void check_pos(int pos, int span) const;
  void end_strand(int index, Port lower);

  std::vector<RawNode> nodes_;
  std::vector<RawEdge> edges_;
  std::vector<Flow> flows_;
  std::vector<Port> open_;  // upper port of each open strand
};

}  // namespace vnalg
