#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnalg/errors.hpp"

namespace vnalg {

/// Element of the carrier {0, ..., n-1}. Files and reports print value + 1.
using Symbol = std::uint8_t;

/// Largest carrier a table may be built over.
inline constexpr int kMaxCarrier = 15;

/// An n x n x n operation table. Cell (a, b, c) is the (b, c) entry of the
/// a'th matrix.
class TernaryTable {
 public:
  TernaryTable() = default;
  explicit TernaryTable(int n);
  TernaryTable(int n, std::vector<Symbol> cells);

  /// Builds a table from 1-based nested matrices [a][b][c].
  static TernaryTable from_one_based(const std::vector<std::vector<std::vector<int>>>& m);

  int size() const { return n_; }

  Symbol operator()(int a, int b, int c) const { return cells_[index(a, b, c)]; }
  void set(int a, int b, int c, Symbol v) { cells_[index(a, b, c)] = v; }

  std::span<const Symbol> cells() const { return cells_; }

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;
  friend auto operator<=>(const TernaryTable&, const TernaryTable&) = default;

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }

  int n_ = 0;
  std::vector<Symbol> cells_;
};

/// An n x n product table whose cells may be undefined.
class PartialProduct {
 public:
  /// Storage marker for an undefined cell. Sorts after every symbol.
  static constexpr Symbol kUndefined = 0xFF;

  PartialProduct() = default;
  /// Everywhere-undefined table.
  explicit PartialProduct(int n);
  PartialProduct(int n, std::vector<Symbol> cells);

  /// Builds a table from 1-based rows; std::nullopt marks an undefined cell.
  static PartialProduct from_one_based(const std::vector<std::vector<std::optional<int>>>& rows);

  int size() const { return n_; }

  std::optional<Symbol> operator()(int a, int b) const {
    Symbol v = cells_[index(a, b)];
    if (v == kUndefined) return std::nullopt;
    return v;
  }
  bool defined(int a, int b) const { return cells_[index(a, b)] != kUndefined; }
  Symbol raw(int a, int b) const { return cells_[index(a, b)]; }
  void set(int a, int b, std::optional<Symbol> v) { cells_[index(a, b)] = v ? *v : kUndefined; }

  int holes() const;
  std::span<const Symbol> cells() const { return cells_; }

  friend bool operator==(const PartialProduct&, const PartialProduct&) = default;
  friend auto operator<=>(const PartialProduct&, const PartialProduct&) = default;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_ = 0;
  std::vector<Symbol> cells_;
};

struct VirtualTribracket {
  TernaryTable horizontal;  // [,,]
  TernaryTable vertical;    // <,,>

  int size() const { return horizontal.size(); }
  friend bool operator==(const VirtualTribracket&, const VirtualTribracket&) = default;
  friend auto operator<=>(const VirtualTribracket&, const VirtualTribracket&) = default;
};

struct VirtualNAlgebra {
  VirtualTribracket tribracket;
  PartialProduct product;

  int size() const { return tribracket.size(); }
  const TernaryTable& horizontal() const { return tribracket.horizontal; }
  const TernaryTable& vertical() const { return tribracket.vertical; }

  friend bool operator==(const VirtualNAlgebra&, const VirtualNAlgebra&) = default;
  friend auto operator<=>(const VirtualNAlgebra&, const VirtualNAlgebra&) = default;
};

/// How an axiom instance that mentions an undefined product is treated.
///
/// Vacuous: an instance is enforced only when every product subterm it
/// mentions is defined.
///
/// Matched: the two sides of each move must agree on definedness. For the
/// R5.1/R5.2 family bc is defined iff a[a,b,c] is defined, for R5.3/R5.4 ab
/// is defined iff [a,b,c]c is defined (likewise for the <,,> family), and the
/// equations are enforced when both are defined.
enum class Partiality { Vacuous, Matched };

/// The convention under which coloring counts are move invariant.
inline constexpr Partiality kDefaultPartiality = Partiality::Matched;

std::string_view to_string(Partiality p);
std::optional<Partiality> parse_partiality(std::string_view s);

/// Every checkable condition, with its short label.
enum class Axiom : std::uint8_t {
  LatinHorizontal,
  LatinVertical,
  LatinProduct,
  III_i,
  III_ii,
  vII,
  vIII_i,
  vIII_ii,
  m_i,
  m_ii,
  R4,
  R5_1,
  R5_2,
  R5_3,
  R5_4,
  vR5_1,
  vR5_2,
  vR5_3,
  vR5_4,
};

inline constexpr int kAxiomCount = 19;

std::string_view label(Axiom a);

// Structural predicates.
bool is_latin_cube(const TernaryTable& t);
bool is_latin_square(const PartialProduct& p);
bool is_partial_latin_square(const PartialProduct& p);

// Tribracket axioms. Tables are assumed to be Latin cubes of equal size.
bool check_horizontal(const TernaryTable& t);
bool check_vertical(const TernaryTable& t);
bool check_mixed(const TernaryTable& h, const TernaryTable& v);

// Product axioms: R4 and R5.1-R5.4 against [,,], vR5.1-vR5.4 against <,,>.
bool check_product_classical(const TernaryTable& h, const PartialProduct& p,
                             Partiality mode = kDefaultPartiality);
bool check_product_virtual(const TernaryTable& v, const PartialProduct& p,
                           Partiality mode = kDefaultPartiality);

bool is_virtual_tribracket(const VirtualTribracket& t);
bool is_virtual_nalgebra(const VirtualNAlgebra& alg, Partiality mode = kDefaultPartiality);

/// All failing conditions in declaration order. Tables of mismatched size
/// report every Latin condition as failed.
std::vector<Axiom> failing_axioms(const VirtualNAlgebra& alg,
                                  Partiality mode = kDefaultPartiality);
std::vector<Axiom> failing_axioms(const VirtualTribracket& t);

enum class TernaryRole { A, B, C, D };
enum class ProductRole { A, B, C };

/// Completes [a,b,c]=d given three of the four. `known` lists the other roles
/// in a,b,c,d order. Requires a Latin cube.
Symbol solve_ternary(const TernaryTable& t, TernaryRole missing, std::array<Symbol, 3> known);

/// Completes ab=c among defined cells, or std::nullopt if none matches.
/// Throws CorruptStructure if two defined cells match.
std::optional<Symbol> solve_product(const PartialProduct& p, ProductRole missing,
                                    std::array<Symbol, 2> known);

/// Relabels every symbol x by perm[x] (simultaneous conjugation).
TernaryTable relabel(const TernaryTable& t, std::span<const Symbol> perm);
PartialProduct relabel(const PartialProduct& p, std::span<const Symbol> perm);
VirtualNAlgebra relabel(const VirtualNAlgebra& alg, std::span<const Symbol> perm);

/// The virtual tribracket with trivial tables on one element.
TernaryTable trivial_table();

}  // namespace vnalg
