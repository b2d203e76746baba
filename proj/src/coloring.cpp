#include "vnalg/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace vnalg {

namespace {

bool holds(const LocalConstraint& lc, const VirtualNAlgebra& alg, std::span<const int> color) {
  auto r = [&](int i) { return color[lc.roles[i]]; };
  switch (lc.kind) {
    case ConstraintKind::HorizontalBracket:
      return alg.horizontal()(r(0), r(1), r(2)) == r(3);
    case ConstraintKind::VerticalBracket:
      return alg.vertical()(r(0), r(1), r(2)) == r(3);
    case ConstraintKind::Product: {
      auto v = alg.product(r(0), r(1));
      return v && *v == r(2);
    }
  }
  return false;
}

/// Value forced on role `slot` by the other roles, or nullopt if none fits.
std::optional<Symbol> forced(const LocalConstraint& lc, const VirtualNAlgebra& alg,
                             std::span<const int> color, int slot) {
  std::array<Symbol, 3> known{};
  int k = 0;
  for (int i = 0; i < lc.arity(); ++i)
    if (i != slot) known[k++] = static_cast<Symbol>(color[lc.roles[i]]);
  if (lc.kind == ConstraintKind::Product)
    return solve_product(alg.product, static_cast<ProductRole>(slot), {known[0], known[1]});
  const TernaryTable& t =
      lc.kind == ConstraintKind::HorizontalBracket ? alg.horizontal() : alg.vertical();
  return solve_ternary(t, static_cast<TernaryRole>(slot), known);
}

class Solver {
 public:
  Solver(const Diagram& d, const VirtualNAlgebra& alg, bool enumerate)
      : alg_(alg), enumerate_(enumerate), fm_(face_map(d)), constraints_(local_constraints(d, fm_)) {
    const std::size_t f = fm_.faces.size();
    touching_.resize(f);
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      const auto& lc = constraints_[c];
      for (int i = 0; i < lc.arity(); ++i) touching_[lc.roles[i]].push_back(static_cast<int>(c));
    }
    order_.resize(f);
    std::iota(order_.begin(), order_.end(), 0);
    std::ranges::stable_sort(order_, std::greater<>{}, [&](int x) { return touching_[x].size(); });
    for (auto& list : touching_) {
      std::ranges::sort(list);
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    color_.assign(f, -1);
  }

  ColoringCount run() {
    search(0);
    ColoringCount out;
    out.value = count_;
    if (enumerate_) {
      std::ranges::sort(found_);
      out.colorings = std::move(found_);
    }
    return out;
  }

 private:
  // Assigns and propagates. On failure the trail still records what was set.
  bool assign(int face, int symbol) {
    color_[face] = symbol;
    trail_.push_back(face);
    for (int c : touching_[face]) {
      const auto& lc = constraints_[c];
      int open = -1, open_slots = 0;
      for (int i = 0; i < lc.arity(); ++i)
        if (color_[lc.roles[i]] < 0) {
          ++open_slots;
          open = i;
        }
      if (open_slots == 0) {
        if (!holds(lc, alg_, color_)) return false;
      } else if (open_slots == 1) {
        auto v = forced(lc, alg_, color_, open);
        if (!v || !assign(lc.roles[open], *v)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void search(std::size_t next) {
    while (next < order_.size() && color_[order_[next]] >= 0) ++next;
    if (next == order_.size()) {
      ++count_;
      if (enumerate_) {
        Coloring c;
        for (std::size_t f = 0; f < color_.size(); ++f) c[fm_.faces[f].id] = static_cast<Symbol>(color_[f]);
        found_.push_back(std::move(c));
      }
      return;
    }
    const int face = order_[next];
    for (int s = 0; s < alg_.size(); ++s) {
      std::size_t mark = trail_.size();
      if (assign(face, s)) search(next + 1);
      undo(mark);
    }
  }

  const VirtualNAlgebra& alg_;
  bool enumerate_;
  FaceMap fm_;
  std::vector<LocalConstraint> constraints_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<int> trail_;
  std::uint64_t count_ = 0;
  std::vector<Coloring> found_;
};

}  // namespace

bool satisfies(const Diagram& d, const FaceMap& fm, const VirtualNAlgebra& alg, const Coloring& c) {
  std::vector<int> color(fm.faces.size(), -1);
  for (const Face& f : fm.faces) {
    auto it = c.find(f.id);
    if (it == c.end() || it->second >= alg.size()) return false;
    color[f.id] = it->second;
  }
  for (const auto& lc : local_constraints(d, fm))
    if (!holds(lc, alg, color)) return false;
  return true;
}

ColoringCount count_colorings(const Diagram& d, const VirtualNAlgebra& alg, bool enumerate) {
  return Solver(d, alg, enumerate).run();
}

ColoringCount count_tangle_colorings(const Diagram& d, const VirtualNAlgebra& alg, bool enumerate) {
  return count_colorings(d, alg, enumerate);
}

ColoringCount brute_force_count(const Diagram& d, const VirtualNAlgebra& alg, bool enumerate) {
  FaceMap fm = face_map(d);
  const std::size_t f = fm.faces.size();
  if (f > kBruteForceFaceLimit)
    throw LimitExceeded("brute force needs at most " + std::to_string(kBruteForceFaceLimit) +
                        " faces, diagram has " + std::to_string(f));
  const auto constraints = local_constraints(d, fm);
  const int n = alg.size();
  ColoringCount out;
  if (enumerate) out.colorings.emplace();
  std::vector<int> color(f, 0);
  for (;;) {
    bool ok = std::ranges::all_of(constraints, [&](const auto& lc) { return holds(lc, alg, color); });
    if (ok) {
      ++out.value;
      if (enumerate) {
        Coloring c;
        for (std::size_t i = 0; i < f; ++i) c[static_cast<int>(i)] = static_cast<Symbol>(color[i]);
        out.colorings->push_back(std::move(c));
      }
    }
    std::size_t i = 0;
    while (i < f && ++color[i] == n) color[i++] = 0;
    if (i == f) break;
  }
  if (out.colorings) std::ranges::sort(*out.colorings);
  return out;
}

}  // namespace vnalg
