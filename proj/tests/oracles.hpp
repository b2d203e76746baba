#pragma once
// Independent reference implementations used only by tests. None of these
// call into the library's search, face tracing or solver code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "vnalg/algebra.hpp"
#include "vnalg/diagram.hpp"

namespace oracle {

using vnalg::PartialProduct;
using vnalg::Partiality;
using vnalg::TernaryTable;

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Latin squares as stacks of row permutations with distinct columns.
inline std::vector<std::vector<std::vector<int>>> latin_squares(int n) {
  const auto perms = permutations(n);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows;
  auto rec = [&](auto& self) -> void {
    if (static_cast<int>(rows.size()) == n) {
      out.push_back(rows);
      return;
    }
    for (const auto& p : perms) {
      bool ok = true;
      for (const auto& r : rows)
        for (int c = 0; c < n && ok; ++c) ok = r[c] != p[c];
      if (!ok) continue;
      rows.push_back(p);
      self(self);
      rows.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// Latin cubes as stacks of Latin-square layers, distinct along the stack.
inline std::uint64_t count_latin_cubes(int n) {
  const auto squares = latin_squares(n);
  std::vector<const std::vector<std::vector<int>>*> layers;
  std::uint64_t count = 0;
  auto rec = [&](auto& self) -> void {
    if (static_cast<int>(layers.size()) == n) {
      ++count;
      return;
    }
    for (const auto& s : squares) {
      bool ok = true;
      for (const auto* l : layers)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n && ok; ++c) ok = (*l)[b][c] != s[b][c];
      if (!ok) continue;
      layers.push_back(&s);
      self(self);
      layers.pop_back();
    }
  };
  rec(rec);
  return count;
}

inline bool latin_cube(const TernaryTable& t) {
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::set<int> x, y, z;
      for (int k = 0; k < n; ++k) {
        x.insert(t(k, i, j));
        y.insert(t(i, k, j));
        z.insert(t(i, j, k));
      }
      if (x.size() != static_cast<std::size_t>(n) || y.size() != static_cast<std::size_t>(n) ||
          z.size() != static_cast<std::size_t>(n) || *x.rbegin() >= n || *y.rbegin() >= n ||
          *z.rbegin() >= n)
        return false;
    }
  return true;
}

inline bool horizontal_ok(const TernaryTable& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (t(a, b, t(b, c, d)) != t(a, t(a, b, c), t(t(a, b, c), c, d))) return false;
          if (t(t(a, b, c), c, d) != t(t(a, b, t(b, c, d)), t(b, c, d), d)) return false;
        }
  return true;
}

inline bool vertical_ok(const TernaryTable& v) {
  const int n = v.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (v(a, v(a, b, c), c) != b) return false;
        for (int d = 0; d < n; ++d) {
          if (v(a, b, v(b, c, d)) != v(a, v(a, b, c), v(v(a, b, c), c, d))) return false;
          if (v(v(a, b, c), c, d) != v(v(a, b, v(b, c, d)), v(b, c, d), d)) return false;
        }
      }
  return true;
}

inline bool mixed_ok(const TernaryTable& h, const TernaryTable& v) {
  const int n = h.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (h(v(a, b, c), c, d) != v(h(a, b, v(b, c, d)), v(b, c, d), d)) return false;
          if (h(a, b, v(b, c, d)) != v(a, v(a, b, c), h(v(a, b, c), c, d))) return false;
        }
  return true;
}

inline bool partial_latin(const PartialProduct& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    std::set<int> row, col;
    int rd = 0, cd = 0;
    for (int j = 0; j < n; ++j) {
      if (auto v = p(i, j)) {
        row.insert(*v);
        ++rd;
      }
      if (auto v = p(j, i)) {
        col.insert(*v);
        ++cd;
      }
    }
    if (static_cast<int>(row.size()) != rd || static_cast<int>(col.size()) != cd) return false;
  }
  return true;
}

/// R5-type equations for bracket `t`. The instance (a,b,c) of the first pair
/// compares the regions around bc with the region a[a,b,c]; the second pair
/// compares ab with [a,b,c]c. Under Matched both regions of a pair must be
/// defined together.
inline bool r5_family_ok(const TernaryTable& t, const PartialProduct& p, Partiality mode) {
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int abc = t(a, b, c);
        const auto bc = p(b, c);
        const auto left = p(a, abc);
        if (mode == Partiality::Matched && bc.has_value() != left.has_value()) return false;
        if (bc) {
          if (left && *left != t(a, b, *bc)) return false;
          if ((mode == Partiality::Vacuous || left) && abc != t(t(a, b, *bc), *bc, c)) return false;
        }
        const auto ab = p(a, b);
        const auto right = p(abc, c);
        if (mode == Partiality::Matched && ab.has_value() != right.has_value()) return false;
        if (ab) {
          if (right && *right != t(*ab, b, c)) return false;
          if ((mode == Partiality::Vacuous || right) && abc != t(a, *ab, t(*ab, b, c))) return false;
        }
      }
  return true;
}

inline bool r4_ok(const TernaryTable& h, const PartialProduct& p) {
  for (int a = 0; a < h.size(); ++a)
    for (int b = 0; b < h.size(); ++b)
      if (auto ab = p(a, b); ab && h(a, *ab, b) != *ab) return false;
  return true;
}

inline bool nalgebra_ok(const vnalg::VirtualNAlgebra& alg, Partiality mode) {
  const auto& h = alg.horizontal();
  const auto& v = alg.vertical();
  return latin_cube(h) && latin_cube(v) && partial_latin(alg.product) && horizontal_ok(h) &&
         vertical_ok(v) && mixed_ok(h, v) && r4_ok(h, alg.product) &&
         r5_family_ok(h, alg.product, mode) && r5_family_ok(v, alg.product, mode);
}

/// Faces of a closed diagram by merging node corners across edges. Returns
/// the face count and, for every dart, a representative of its left face.
struct CornerFaces {
  int count = 0;
  std::map<int, int> left;  // dart -> root corner id
};

inline CornerFaces corner_faces(const vnalg::Diagram& d) {
  std::map<int, std::pair<int, int>> where;  // dart -> (node index, position)
  std::vector<int> base;                     // first corner id of each node
  int corners = 0;
  for (std::size_t i = 0; i < d.nodes().size(); ++i) {
    base.push_back(corners);
    const auto& rot = d.nodes()[i].rotation;
    for (std::size_t j = 0; j < rot.size(); ++j)
      where[rot[j]] = {static_cast<int>(i), static_cast<int>(j)};
    corners += static_cast<int>(rot.size());
  }
  std::vector<int> parent(corners);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto corner = [&](int node, int pos) {
    const int deg = static_cast<int>(d.nodes()[node].rotation.size());
    return base[node] + ((pos % deg) + deg) % deg;
  };
  int loops = 0;
  for (const auto& e : d.edges()) {
    auto x = where.find(e.darts[0]);
    auto y = where.find(e.darts[1]);
    if (x == where.end() && y == where.end()) {
      ++loops;
      continue;
    }
    auto [u, i] = x->second;
    auto [v, j] = y->second;
    parent[find(corner(u, i))] = find(corner(v, j - 1));
    parent[find(corner(u, i - 1))] = find(corner(v, j));
  }
  CornerFaces out;
  std::set<int> roots;
  for (int c = 0; c < corners; ++c) roots.insert(find(c));
  out.count = static_cast<int>(roots.size()) + (loops > 0 ? loops + 1 : 0);
  for (const auto& [dart, pos] : where) out.left[dart] = find(corner(pos.first, pos.second));
  return out;
}

/// Counts colorings by trying every assignment and evaluating each local
/// constraint directly against the tables.
inline std::uint64_t naive_count(const vnalg::VirtualNAlgebra& alg, int faces,
                                 const std::vector<vnalg::LocalConstraint>& constraints) {
  const int n = alg.size();
  std::vector<int> color(faces, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& lc : constraints) {
      const auto& r = lc.roles;
      if (lc.kind == vnalg::ConstraintKind::Product) {
        auto v = alg.product(color[r[0]], color[r[1]]);
        ok = v && *v == color[r[2]];
      } else {
        const auto& t = lc.kind == vnalg::ConstraintKind::HorizontalBracket ? alg.horizontal()
                                                                            : alg.vertical();
        ok = t(color[r[0]], color[r[1]], color[r[2]]) == color[r[3]];
      }
      if (!ok) break;
    }
    count += ok;
    int i = 0;
    while (i < faces && ++color[i] == n) color[i++] = 0;
    if (i == faces) return count;
  }
}

/// Deterministic generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return rng_() & 1; }
  std::vector<vnalg::Symbol> permutation(int n) {
    std::vector<vnalg::Symbol> p(n);
    std::iota(p.begin(), p.end(), vnalg::Symbol{0});
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
    return p;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
