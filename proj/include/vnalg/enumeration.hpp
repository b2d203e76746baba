#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnalg/algebra.hpp"

namespace vnalg {

enum class Target { LatinSquare, LatinCube, Horizontal, Vertical, VirtualTribracket, VNAlgebra };
enum class PairDomain { Prefiltered, AllCubes };

std::string_view to_string(Target t);
std::string_view to_string(PairDomain d);
std::optional<Target> parse_target(std::string_view s);
std::optional<PairDomain> parse_pair_domain(std::string_view s);

struct SearchSpec {
  int n = 0;
  Target target = Target::LatinCube;
  int holes = 0;  // VNAlgebra only
  PairDomain pair_domain = PairDomain::Prefiltered;
  Partiality partiality = kDefaultPartiality;

  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

/// One catalog entry: the fields of an algebra file. Latin squares occupy
/// only `product`; bare cubes only `horizontal`.
struct Structure {
  int n = 0;
  std::optional<TernaryTable> horizontal;
  std::optional<TernaryTable> vertical;
  std::optional<PartialProduct> product;

  friend bool operator==(const Structure&, const Structure&) = default;
  friend auto operator<=>(const Structure&, const Structure&) = default;
};

Structure to_structure(const VirtualNAlgebra& alg);
/// Throws std::invalid_argument if a table is missing.
VirtualNAlgebra to_algebra(const Structure& s);
VirtualTribracket to_tribracket(const Structure& s);

struct Catalog {
  SearchSpec spec;
  std::vector<Structure> entries;  // strictly increasing

  std::size_t count() const { return entries.size(); }
  friend bool operator==(const Catalog&, const Catalog&) = default;
};

struct SearchOptions {
  int jobs = 1;
  /// Lifts the n <= 4 (cubes) / n <= 5 (squares) guard. Unsupported.
  bool allow_large = false;
  /// Fixes the first cells (lexicographic order) of the table being
  /// enumerated. Used to shard a search.
  std::vector<Symbol> prefix;
  /// Keeps only horizontal candidates selected by a seeded hash, at roughly
  /// this fraction. Applies to tribracket and algebra searches.
  double sample_fraction = 1.0;
  std::uint64_t sample_seed = 0;
};

Catalog enumerate_latin_squares(int n, const SearchOptions& opts = {});
Catalog enumerate_latin_cubes(int n, const SearchOptions& opts = {});
/// `which` is Target::Horizontal or Target::Vertical.
Catalog enumerate_tribracket_components(int n, Target which, const SearchOptions& opts = {});
Catalog enumerate_virtual_tribrackets(int n, PairDomain domain, const SearchOptions& opts = {});
Catalog search_vnalgebras(int n, int holes, Partiality mode, const SearchOptions& opts = {});

/// Runs the search a SearchSpec describes.
Catalog run_search(const SearchSpec& spec, const SearchOptions& opts = {});

/// Whether the sampling option keeps horizontal candidate `t`.
bool sampled(const TernaryTable& t, const SearchOptions& opts);

struct PairStats {
  std::size_t pairs = 0;
  std::size_t distinct_horizontal = 0;
  std::size_t distinct_vertical = 0;
  std::size_t distinct_cubes = 0;  // union of both sides
};
PairStats pair_stats(const Catalog& tribrackets);

/// Number of (h, v) pairs satisfying only m.i and m.ii, with both sides drawn
/// from all Latin cubes (AllCubes) or from the horizontal x vertical
/// component catalogs (Prefiltered).
std::size_t count_mixed_pairs(int n, PairDomain domain, const SearchOptions& opts = {});

/// Distinct product tables in an algebra catalog.
std::size_t distinct_products(const Catalog& algebras);

}  // namespace vnalg
