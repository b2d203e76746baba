#include "vnalg/moves.hpp"

#include <array>
#include <functional>
#include <random>
#include <string>

#include "vnalg/slices.hpp"

namespace vnalg {

namespace {

constexpr std::array<std::pair<Move, std::string_view>, 11> kMoveNames{{
    {Move::R1, "R1"},
    {Move::R2, "R2"},
    {Move::R3, "R3"},
    {Move::VR1, "VR1"},
    {Move::VR2, "VR2"},
    {Move::VR3, "VR3"},
    {Move::VRMixed, "VR_MIXED"},
    {Move::R4, "R4"},
    {Move::R5, "R5"},
    {Move::VR5, "VR5"},
    {Move::VirtualR4, "VR4"},
}};

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
bool coin(Rng& rng) { return pick(rng, 2) == 1; }
Flow any_flow(Rng& rng) { return coin(rng) ? Flow::Up : Flow::Down; }
CrossType any_classical(Rng& rng) { return coin(rng) ? CrossType::OverRight : CrossType::OverLeft; }
CrossType any_cross(Rng& rng) {
  int k = pick(rng, 3);
  return k == 0 ? CrossType::OverLeft : k == 1 ? CrossType::OverRight : CrossType::Virtual;
}
CrossType flip(CrossType t) {
  if (t == CrossType::Virtual) return t;
  return t == CrossType::OverLeft ? CrossType::OverRight : CrossType::OverLeft;
}

constexpr int kMaxWidth = 6;

/// One random slice that keeps the width at most kMaxWidth.
void random_slice(SliceBuilder& b, Rng& rng) {
  const auto& f = b.flows();
  int w = b.width();
  std::vector<int> cups, joins;
  for (int i = 0; i + 1 < w; ++i) (f[i] != f[i + 1] ? cups : joins).push_back(i);
  for (;;) {
    switch (pick(rng, 5)) {
      case 0:
        if (w + 2 > kMaxWidth) break;
        b.cap(pick(rng, w + 1), any_flow(rng));
        return;
      case 1:
        if (w < 2) break;
        b.cross(pick(rng, w - 1), any_cross(rng));
        return;
      case 2:
        if (joins.empty()) break;
        b.join(joins[pick(rng, static_cast<int>(joins.size()))]);
        return;
      case 3:
        if (w == 0 || w + 1 > kMaxWidth) break;
        b.fork(pick(rng, w));
        return;
      case 4:
        if (cups.empty() || w <= 2) break;
        b.cup(cups[pick(rng, static_cast<int>(cups.size()))]);
        return;
    }
  }
}

/// Closes every open strand, mixing in a few crossings.
void close_up(SliceBuilder& b, Rng& rng) {
  int crossings = pick(rng, 3);
  while (b.width() > 0) {
    const auto& f = b.flows();
    int w = b.width();
    if (crossings > 0 && w >= 2) {
      --crossings;
      b.cross(pick(rng, w - 1), any_cross(rng));
      continue;
    }
    std::vector<int> cups;
    for (int i = 0; i + 1 < w; ++i)
      if (f[i] != f[i + 1]) cups.push_back(i);
    if (!cups.empty()) {
      b.cup(cups[pick(rng, static_cast<int>(cups.size()))]);
    } else if (w >= 2) {
      b.join(pick(rng, w - 1));
    } else {
      b.cap(1, f[0]);
      b.join(0);
    }
  }
}

bool connected_and_valid(const Diagram& d) { return validate(d).ok(); }

/// A move as two slice programs acting on `in.size()` adjacent strands
/// starting at the given position. Both programs leave the same flows.
struct LocalMove {
  std::vector<Flow> in;
  std::function<void(SliceBuilder&, int)> before;
  std::function<void(SliceBuilder&, int)> after;
};

LocalMove kink(Rng& rng, CrossType t) {
  Flow f = any_flow(rng);
  bool right = coin(rng);
  return {{f}, [](SliceBuilder&, int) {},
          [=](SliceBuilder& b, int p) {
            if (right) {
              b.cap(p + 1, f);
              b.cross(p, t);
              b.cup(p + 1);
            } else {
              b.cap(p, opposite(f));
              b.cross(p + 1, t);
              b.cup(p);
            }
          }};
}

LocalMove bigon(Rng& rng, bool virtual_) {
  CrossType t = virtual_ ? CrossType::Virtual : any_classical(rng);
  return {{any_flow(rng), any_flow(rng)}, [](SliceBuilder&, int) {},
          [=](SliceBuilder& b, int p) {
            b.cross(p, t);
            b.cross(p, flip(t));
          }};
}

/// Three strands pairwise crossing once. `kind(x, y)` gives the crossing of
/// strand x arriving from the left with strand y.
LocalMove triangle(Rng& rng, std::function<CrossType(int, int)> kind) {
  auto run = [kind](std::array<int, 3> order) {
    return [kind, order](SliceBuilder& b, int p) {
      std::array<int, 3> at{0, 1, 2};
      for (int step : order) {
        b.cross(p + step, kind(at[step], at[step + 1]));
        std::swap(at[step], at[step + 1]);
      }
    };
  };
  return {{any_flow(rng), any_flow(rng), any_flow(rng)}, run({0, 1, 0}), run({1, 0, 1})};
}

LocalMove twist(Rng& rng, bool virtual_) {
  CrossType t = virtual_ ? CrossType::Virtual : any_classical(rng);
  Flow f = any_flow(rng);
  if (coin(rng))
    return {{f, f},
            [=](SliceBuilder& b, int p) {
              b.cross(p, t);
              b.join(p);
            },
            [](SliceBuilder& b, int p) { b.join(p); }};
  return {{f},
          [=](SliceBuilder& b, int p) {
            b.fork(p);
            b.cross(p, t);
          },
          [](SliceBuilder& b, int p) { b.fork(p); }};
}

/// A strand passing a trivalent vertex. Bit 0 of `orientation` selects the
/// vertex type, bit 1 whether the passing strand runs against the others.
LocalMove pass_vertex(Rng& rng, int orientation, bool virtual_) {
  bool two_in = (orientation & 1) == 0;
  bool use_join = coin(rng);
  Flow f = (use_join == two_in) ? Flow::Down : Flow::Up;
  Flow fs = (orientation & 2) ? opposite(f) : f;
  bool from_left = coin(rng);
  bool over = coin(rng);
  CrossType t = virtual_ ? CrossType::Virtual
                         : ((over == from_left) ? CrossType::OverLeft : CrossType::OverRight);
  if (use_join && from_left)
    return {{fs, f, f},
            [=](SliceBuilder& b, int p) {
              b.cross(p, t);
              b.cross(p + 1, t);
              b.join(p);
            },
            [=](SliceBuilder& b, int p) {
              b.join(p + 1);
              b.cross(p, t);
            }};
  if (use_join)
    return {{f, f, fs},
            [=](SliceBuilder& b, int p) {
              b.cross(p + 1, t);
              b.cross(p, t);
              b.join(p + 1);
            },
            [=](SliceBuilder& b, int p) {
              b.join(p);
              b.cross(p, t);
            }};
  if (from_left)
    return {{fs, f},
            [=](SliceBuilder& b, int p) {
              b.cross(p, t);
              b.fork(p);
            },
            [=](SliceBuilder& b, int p) {
              b.fork(p + 1);
              b.cross(p, t);
              b.cross(p + 1, t);
            }};
  return {{f, fs},
          [=](SliceBuilder& b, int p) {
            b.cross(p, t);
            b.fork(p + 1);
          },
          [=](SliceBuilder& b, int p) {
            b.fork(p);
            b.cross(p + 1, t);
            b.cross(p, t);
          }};
}

LocalMove local_move(Move m, Rng& rng, int orientation) {
  switch (m) {
    case Move::R1: return kink(rng, any_classical(rng));
    case Move::VR1: return kink(rng, CrossType::Virtual);
    case Move::R2: return bigon(rng, false);
    case Move::VR2: return bigon(rng, true);
    case Move::R3:
    case Move::VR3:
    case Move::VRMixed: {
      std::array<int, 3> height{0, 1, 2};
      std::shuffle(height.begin(), height.end(), rng);
      int virtual_strand = pick(rng, 3);
      return triangle(rng, [=](int x, int y) {
        if (m == Move::VR3 || (m == Move::VRMixed && (x == virtual_strand || y == virtual_strand)))
          return CrossType::Virtual;
        return height[x] > height[y] ? CrossType::OverLeft : CrossType::OverRight;
      });
    }
    case Move::R4: return twist(rng, false);
    case Move::VirtualR4: return twist(rng, true);
    case Move::R5: return pass_vertex(rng, orientation, false);
    case Move::VR5: return pass_vertex(rng, orientation, true);
  }
  throw DiagramError(DiagramError::Code::UnknownMove, "unknown move");
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + salt + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string_view to_string(Move m) {
  for (const auto& [move, name] : kMoveNames)
    if (move == m) return name;
  return "?";
}

std::optional<Move> parse_move(std::string_view s) {
  if (s == "R5_ALL_4_ORIENTATIONS") return Move::R5;
  if (s == "VR5_BOTH_ORIENTATIONS") return Move::VR5;
  if (s == "FORBIDDEN") return Move::VirtualR4;
  for (const auto& [move, name] : kMoveNames)
    if (name == s) return move;
  return std::nullopt;
}

std::vector<Move> all_moves() {
  return {Move::R1, Move::R2, Move::R3, Move::VR1, Move::VR2,
          Move::VR3, Move::VRMixed, Move::R4, Move::R5, Move::VR5};
}

int orientation_count(Move m) {
  if (m == Move::R5) return 4;
  if (m == Move::VR5) return 2;
  return 1;
}

MovePair move_pair(Move m, std::uint64_t seed, int orientation) {
  if (m == Move::VirtualR4)
    throw DiagramError(DiagramError::Code::ForbiddenMove,
                       "the virtual twist at a vertex is a forbidden move");
  Rng rng(mix(seed, static_cast<std::uint64_t>(m)));
  if (orientation < 0) orientation = pick(rng, orientation_count(m));
  if (orientation >= orientation_count(m))
    throw DiagramError(DiagramError::Code::UnknownMove,
                       std::string(to_string(m)) + " has no orientation " + std::to_string(orientation));

  std::string name = std::string(to_string(m)) + "/" + std::to_string(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LocalMove local = local_move(m, rng, orientation);
    int k = static_cast<int>(local.in.size());

    SliceBuilder b;
    b.cap(0, any_flow(rng));
    for (int i = pick(rng, 4); i > 0; --i) random_slice(b, rng);
    int base = 1 + pick(rng, b.width());
    for (int i = 0; i < k; ++i) b.cap(base + i, local.in[i]);
    for (int shifts = 1 + pick(rng, 2); shifts > 0 && base > 0; --shifts) {
      for (int i = 0; i < k; ++i) b.cross(base - 1 + i, any_cross(rng));
      --base;
    }

    SliceBuilder b1 = b, b2 = b;
    local.before(b1, base);
    local.after(b2, base);
    Rng tail = rng;
    for (SliceBuilder* side : {&b1, &b2}) {
      Rng r = tail;
      for (int i = pick(r, 3); i > 0; --i) random_slice(*side, r);
      close_up(*side, r);
    }
    rng.discard(1);

    Diagram d1 = b1.build(name + "/before");
    Diagram d2 = b2.build(name + "/after");
    if (connected_and_valid(d1) && connected_and_valid(d2)) return {std::move(d1), std::move(d2)};
  }
  throw DiagramError(DiagramError::Code::InvalidDiagram, "no connected ambient found for " + name);
}

Diagram random_closed_diagram(std::uint64_t seed, int ops) {
  Rng rng(mix(seed, 0xD1A9));
  for (;;) {
    SliceBuilder b;
    b.cap(0, any_flow(rng));
    for (int i = 0; i < ops; ++i) random_slice(b, rng);
    close_up(b, rng);
    Diagram d = b.build("random/" + std::to_string(seed));
    if (connected_and_valid(d)) return d;
  }
}

}  // namespace vnalg
