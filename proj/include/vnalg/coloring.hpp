#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "vnalg/algebra.hpp"
#include "vnalg/diagram.hpp"

namespace vnalg {

/// Face id -> symbol, total over the faces of a diagram.
using Coloring = std::map<int, Symbol>;

struct ColoringCount {
  std::uint64_t value = 0;
  std::optional<std::vector<Coloring>> colorings;  // sorted, when requested
};

/// Whether `c` satisfies every local constraint of `d` under `alg`.
bool satisfies(const Diagram& d, const FaceMap& fm, const VirtualNAlgebra& alg, const Coloring& c);

/// Number of face colorings satisfying every local constraint. Backtracks
/// over faces in order of decreasing constraint degree, forcing the last
/// role of a constraint as soon as the others are colored.
ColoringCount count_colorings(const Diagram& d, const VirtualNAlgebra& alg, bool enumerate = false);

/// Same as count_colorings; boundary regions of a tangle are free.
ColoringCount count_tangle_colorings(const Diagram& d, const VirtualNAlgebra& alg,
                                     bool enumerate = false);

/// Exhaustive oracle over all n^F assignments. Throws LimitExceeded for more
/// than 8 faces.
ColoringCount brute_force_count(const Diagram& d, const VirtualNAlgebra& alg, bool enumerate = false);

inline constexpr std::size_t kBruteForceFaceLimit = 8;

}  // namespace vnalg
