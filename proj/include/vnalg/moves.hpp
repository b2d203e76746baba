#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vnalg/diagram.hpp"

namespace vnalg {

/// The generating moves. VirtualR4 is the forbidden move: it is named so
/// that it can be rejected.
enum class Move { R1, R2, R3, VR1, VR2, VR3, VRMixed, R4, R5, VR5, VirtualR4 };

std::string_view to_string(Move m);
/// Accepts the names printed by to_string plus R5_ALL_4_ORIENTATIONS,
/// VR5_BOTH_ORIENTATIONS and FORBIDDEN.
std::optional<Move> parse_move(std::string_view s);

/// The generating set, in the order above (VirtualR4 excluded).
std::vector<Move> all_moves();

/// Orientation classes of a move: 4 for R5 (vertex type x parallel or
/// antiparallel strand), 2 for VR5 (vertex type), otherwise 1.
int orientation_count(Move m);

struct MovePair {
  Diagram before;  // the move's left-hand side
  Diagram after;
};

/// Two closed connected diagrams that agree outside a disk and differ inside
/// it by `m`. The ambient diagram is drawn pseudo-randomly from `seed`; the
/// result depends only on (m, seed, orientation). A negative orientation is
/// chosen from the seed. Throws DiagramError(ForbiddenMove) for VirtualR4.
MovePair move_pair(Move m, std::uint64_t seed, int orientation = -1);

/// A random closed connected diagram with about `ops` elementary slices.
Diagram random_closed_diagram(std::uint64_t seed, int ops = 8);

}  // namespace vnalg
