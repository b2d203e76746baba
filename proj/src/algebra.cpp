#include "vnalg/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "vnalg/product_axioms.hpp"

namespace vnalg {

namespace {

void require_carrier(int n) {
  if (n < 0 || n > kMaxCarrier) {
    throw std::invalid_argument("carrier size " + std::to_string(n) + " out of range");
  }
}

// Checks that the n symbols visited by `at(k)` for k in [0, n) are distinct.
template <class At>
bool is_permutation_line(int n, At at) {
  std::uint32_t seen = 0;
  for (int k = 0; k < n; ++k) {
    const int v = at(k);
    if (v >= n) return false;
    const std::uint32_t bit = 1u << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool same_size(const VirtualNAlgebra& alg) {
  const int n = alg.horizontal().size();
  return alg.vertical().size() == n && alg.product.size() == n;
}

}  // namespace

TernaryTable::TernaryTable(int n) : n_(n) {
  require_carrier(n);
  cells_.assign(static_cast<std::size_t>(n) * n * n, 0);
}

TernaryTable::TernaryTable(int n, std::vector<Symbol> cells) : n_(n), cells_(std::move(cells)) {
  require_carrier(n);
  if (cells_.size() != static_cast<std::size_t>(n) * n * n) {
    throw std::invalid_argument("ternary table needs n^3 cells");
  }
  for (Symbol v : cells_) {
    if (v >= n) throw std::invalid_argument("ternary table symbol out of range");
  }
}

TernaryTable TernaryTable::from_one_based(const std::vector<std::vector<std::vector<int>>>& m) {
  const int n = static_cast<int>(m.size());
  TernaryTable t(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(m[a].size()) != n) throw std::invalid_argument("ragged ternary table");
    for (int b = 0; b < n; ++b) {
      if (static_cast<int>(m[a][b].size()) != n) {
        throw std::invalid_argument("ragged ternary table");
      }
      for (int c = 0; c < n; ++c) {
        const int v = m[a][b][c];
        if (v < 1 || v > n) throw std::invalid_argument("symbol out of range");
        t.set(a, b, c, static_cast<Symbol>(v - 1));
      }
    }
  }
  return t;
}

PartialProduct::PartialProduct(int n) : n_(n) {
  require_carrier(n);
  cells_.assign(static_cast<std::size_t>(n) * n, kUndefined);
}

PartialProduct::PartialProduct(int n, std::vector<Symbol> cells)
    : n_(n), cells_(std::move(cells)) {
  require_carrier(n);
  if (cells_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("product table needs n^2 cells");
  }
  for (Symbol v : cells_) {
    if (v >= n && v != kUndefined) throw std::invalid_argument("product symbol out of range");
  }
}

PartialProduct PartialProduct::from_one_based(
    const std::vector<std::vector<std::optional<int>>>& rows) {
  const int n = static_cast<int>(rows.size());
  PartialProduct p(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) throw std::invalid_argument("ragged product");
    for (int b = 0; b < n; ++b) {
      if (const auto& v = rows[a][b]) {
        if (*v < 1 || *v > n) throw std::invalid_argument("symbol out of range");
        p.set(a, b, static_cast<Symbol>(*v - 1));
      }
    }
  }
  return p;
}

int PartialProduct::holes() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), kUndefined));
}

std::string_view to_string(Partiality p) {
  return p == Partiality::Vacuous ? "VACUOUS" : "MATCHED";
}

std::optional<Partiality> parse_partiality(std::string_view s) {
  if (s == "VACUOUS" || s == "vacuous") return Partiality::Vacuous;
  if (s == "MATCHED" || s == "matched") return Partiality::Matched;
  return std::nullopt;
}

std::string_view label(Axiom a) {
  static constexpr std::array<std::string_view, kAxiomCount> kLabels = {
      "latin[,]", "latin<,>", "latin(.)", "III.i",  "III.ii", "vII",   "vIII.i",
      "vIII.ii",  "m.i",      "m.ii",     "R4",     "R5.1",   "R5.2",  "R5.3",
      "R5.4",     "vR5.1",    "vR5.2",    "vR5.3",  "vR5.4"};
  return kLabels[static_cast<std::size_t>(a)];
}

bool is_latin_cube(const TernaryTable& t) {
  const int n = t.size();
  if (n == 0) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!is_permutation_line(n, [&](int k) { return t(x, y, k); })) return false;
      if (!is_permutation_line(n, [&](int k) { return t(x, k, y); })) return false;
      if (!is_permutation_line(n, [&](int k) { return t(k, x, y); })) return false;
    }
  }
  return true;
}

bool is_partial_latin_square(const PartialProduct& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    std::uint32_t row = 0, col = 0;
    for (int k = 0; k < n; ++k) {
      const Symbol r = p.raw(x, k);
      if (r != PartialProduct::kUndefined) {
        if (r >= n || (row & (1u << r))) return false;
        row |= 1u << r;
      }
      const Symbol c = p.raw(k, x);
      if (c != PartialProduct::kUndefined) {
        if (c >= n || (col & (1u << c))) return false;
        col |= 1u << c;
      }
    }
  }
  return true;
}

bool is_latin_square(const PartialProduct& p) {
  return p.size() > 0 && p.holes() == 0 && is_partial_latin_square(p);
}

bool check_horizontal(const TernaryTable& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int abc = t(a, b, c);
        for (int d = 0; d < n; ++d) {
          const int bcd = t(b, c, d);
          const int abc_cd = t(abc, c, d);
          if (t(a, b, bcd) != t(a, abc, abc_cd)) return false;               // III.i
          if (abc_cd != t(t(a, b, bcd), bcd, d)) return false;                // III.ii
        }
      }
    }
  }
  return true;
}

bool check_vertical(const TernaryTable& t) {
  const int n = t.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t(a, t(a, b, c), c) != b) return false;  // vII
      }
    }
  }
  return check_horizontal(t);  // vIII.i and vIII.ii have the III shape
}

bool check_mixed(const TernaryTable& h, const TernaryTable& v) {
  const int n = h.size();
  if (v.size() != n) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int vabc = v(a, b, c);
        for (int d = 0; d < n; ++d) {
          const int vbcd = v(b, c, d);
          const int hab_vbcd = h(a, b, vbcd);
          if (h(vabc, c, d) != v(hab_vbcd, vbcd, d)) return false;        // m.i
          if (hab_vbcd != v(a, vabc, h(vabc, c, d))) return false;        // m.ii
        }
      }
    }
  }
  return true;
}

namespace {

auto product_cells(const PartialProduct& p) {
  return [&p](int a, int b) -> int {
    const Symbol v = p.raw(a, b);
    return v == PartialProduct::kUndefined ? detail::kHole : static_cast<int>(v);
  };
}

bool product_axioms_hold(const TernaryTable& h, const TernaryTable& v, const PartialProduct& p,
                         Partiality mode, detail::Family family) {
  return detail::scan_product_axioms(h, v, product_cells(p), mode, family,
                                     [](Axiom) { return false; });
}

}  // namespace

bool check_product_classical(const TernaryTable& h, const PartialProduct& p, Partiality mode) {
  if (h.size() != p.size()) return false;
  return product_axioms_hold(h, h, p, mode, detail::Family::Classical);
}

bool check_product_virtual(const TernaryTable& v, const PartialProduct& p, Partiality mode) {
  if (v.size() != p.size()) return false;
  return product_axioms_hold(v, v, p, mode, detail::Family::Virtual);
}

bool is_virtual_tribracket(const VirtualTribracket& t) {
  return t.vertical.size() == t.horizontal.size() && is_latin_cube(t.horizontal) &&
         is_latin_cube(t.vertical) && check_horizontal(t.horizontal) &&
         check_vertical(t.vertical) && check_mixed(t.horizontal, t.vertical);
}

bool is_virtual_nalgebra(const VirtualNAlgebra& alg, Partiality mode) {
  return same_size(alg) && is_virtual_tribracket(alg.tribracket) &&
         is_partial_latin_square(alg.product) &&
         product_axioms_hold(alg.horizontal(), alg.vertical(), alg.product, mode,
                             detail::Family::Both);
}

namespace {

// Per-equation scan used for diagnostics; slower than the fused checkers.
void tribracket_failures(const TernaryTable& h, const TernaryTable& v,
                         std::array<bool, kAxiomCount>& bad) {
  const int n = h.size();
  auto mark = [&](Axiom a) { bad[static_cast<std::size_t>(a)] = true; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (v(a, v(a, b, c), c) != b) mark(Axiom::vII);
        for (int d = 0; d < n; ++d) {
          if (h(a, b, h(b, c, d)) != h(a, h(a, b, c), h(h(a, b, c), c, d))) mark(Axiom::III_i);
          if (h(h(a, b, c), c, d) != h(h(a, b, h(b, c, d)), h(b, c, d), d)) mark(Axiom::III_ii);
          if (v(a, b, v(b, c, d)) != v(a, v(a, b, c), v(v(a, b, c), c, d))) mark(Axiom::vIII_i);
          if (v(v(a, b, c), c, d) != v(v(a, b, v(b, c, d)), v(b, c, d), d)) mark(Axiom::vIII_ii);
          if (h(v(a, b, c), c, d) != v(h(a, b, v(b, c, d)), v(b, c, d), d)) mark(Axiom::m_i);
          if (h(a, b, v(b, c, d)) != v(a, v(a, b, c), h(v(a, b, c), c, d))) mark(Axiom::m_ii);
        }
      }
    }
  }
}

std::vector<Axiom> collect(const std::array<bool, kAxiomCount>& bad) {
  std::vector<Axiom> out;
  for (int i = 0; i < kAxiomCount; ++i) {
    if (bad[i]) out.push_back(static_cast<Axiom>(i));
  }
  return out;
}

}  // namespace

std::vector<Axiom> failing_axioms(const VirtualTribracket& t) {
  std::array<bool, kAxiomCount> bad{};
  const bool h_ok = is_latin_cube(t.horizontal);
  const bool v_ok = t.vertical.size() == t.horizontal.size() && is_latin_cube(t.vertical);
  bad[static_cast<std::size_t>(Axiom::LatinHorizontal)] = !h_ok;
  bad[static_cast<std::size_t>(Axiom::LatinVertical)] = !v_ok;
  // Equations are only meaningful over well-formed tables of one size.
  if (t.vertical.size() == t.horizontal.size() && t.horizontal.size() > 0) {
    tribracket_failures(t.horizontal, t.vertical, bad);
  }
  return collect(bad);
}

std::vector<Axiom> failing_axioms(const VirtualNAlgebra& alg, Partiality mode) {
  std::array<bool, kAxiomCount> bad{};
  if (!same_size(alg) || alg.size() == 0) {
    bad[static_cast<std::size_t>(Axiom::LatinHorizontal)] = true;
    bad[static_cast<std::size_t>(Axiom::LatinVertical)] = true;
    bad[static_cast<std::size_t>(Axiom::LatinProduct)] = true;
    return collect(bad);
  }
  for (Axiom a : failing_axioms(alg.tribracket)) bad[static_cast<std::size_t>(a)] = true;
  bad[static_cast<std::size_t>(Axiom::LatinProduct)] = !is_partial_latin_square(alg.product);
  detail::scan_product_axioms(alg.horizontal(), alg.vertical(), product_cells(alg.product), mode,
                              detail::Family::Both, [&](Axiom a) {
                                bad[static_cast<std::size_t>(a)] = true;
                                return true;
                              });
  return collect(bad);
}

Symbol solve_ternary(const TernaryTable& t, TernaryRole missing, std::array<Symbol, 3> known) {
  const int n = t.size();
  auto [x, y, z] = known;
  if (missing == TernaryRole::D) return t(x, y, z);
  for (int s = 0; s < n; ++s) {
    switch (missing) {
      case TernaryRole::A:
        if (t(s, x, y) == z) return static_cast<Symbol>(s);
        break;
      case TernaryRole::B:
        if (t(x, s, y) == z) return static_cast<Symbol>(s);
        break;
      case TernaryRole::C:
        if (t(x, y, s) == z) return static_cast<Symbol>(s);
        break;
      case TernaryRole::D:
        break;
    }
  }
  throw CorruptStructure("solve_ternary: table is not a Latin cube");
}

std::optional<Symbol> solve_product(const PartialProduct& p, ProductRole missing,
                                    std::array<Symbol, 2> known) {
  const int n = p.size();
  auto [x, y] = known;
  if (missing == ProductRole::C) return p(x, y);
  std::optional<Symbol> found;
  for (int s = 0; s < n; ++s) {
    const auto v = missing == ProductRole::A ? p(s, x) : p(x, s);
    if (v && *v == y) {
      if (found) throw CorruptStructure("solve_product: repeated symbol in a product line");
      found = static_cast<Symbol>(s);
    }
  }
  return found;
}

TernaryTable relabel(const TernaryTable& t, std::span<const Symbol> perm) {
  const int n = t.size();
  TernaryTable out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) out.set(perm[a], perm[b], perm[c], perm[t(a, b, c)]);
    }
  }
  return out;
}

PartialProduct relabel(const PartialProduct& p, std::span<const Symbol> perm) {
  const int n = p.size();
  PartialProduct out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (auto v = p(a, b)) out.set(perm[a], perm[b], perm[*v]);
    }
  }
  return out;
}

VirtualNAlgebra relabel(const VirtualNAlgebra& alg, std::span<const Symbol> perm) {
  return {{relabel(alg.horizontal(), perm), relabel(alg.vertical(), perm)},
          relabel(alg.product, perm)};
}

TernaryTable trivial_table() { return TernaryTable(1, {0}); }

}  // namespace vnalg
