#include "vnalg/enumeration.hpp"

#include <algorithm>
#include <set>

#include "vnalg/parallel.hpp"
#include "vnalg/product_axioms.hpp"

namespace vnalg {

std::string_view to_string(Target t) {
  switch (t) {
    case Target::LatinSquare: return "LATIN_SQUARE";
    case Target::LatinCube: return "LATIN_CUBE";
    case Target::Horizontal: return "HORIZONTAL";
    case Target::Vertical: return "VERTICAL";
    case Target::VirtualTribracket: return "VIRTUAL_TRIBRACKET";
    case Target::VNAlgebra: return "VNALGEBRA";
  }
  return "?";
}

std::string_view to_string(PairDomain d) {
  return d == PairDomain::Prefiltered ? "PREFILTERED" : "ALL_CUBES";
}

std::optional<Target> parse_target(std::string_view s) {
  for (Target t : {Target::LatinSquare, Target::LatinCube, Target::Horizontal, Target::Vertical,
                   Target::VirtualTribracket, Target::VNAlgebra}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

std::optional<PairDomain> parse_pair_domain(std::string_view s) {
  if (s == "PREFILTERED") return PairDomain::Prefiltered;
  if (s == "ALL_CUBES") return PairDomain::AllCubes;
  return std::nullopt;
}

Structure to_structure(const VirtualNAlgebra& alg) {
  return {alg.size(), alg.horizontal(), alg.vertical(), alg.product};
}

VirtualTribracket to_tribracket(const Structure& s) {
  if (!s.horizontal || !s.vertical) {
    throw std::invalid_argument("structure lacks a horizontal or vertical table");
  }
  return {*s.horizontal, *s.vertical};
}

VirtualNAlgebra to_algebra(const Structure& s) {
  if (!s.product) throw std::invalid_argument("structure lacks a product table");
  return {to_tribracket(s), *s.product};
}

namespace {

void guard(int n, int max_n, const SearchOptions& opts, std::string_view what) {
  if (n < 1 || (n > max_n && !opts.allow_large) || n > kMaxCarrier) {
    throw LimitExceeded(std::string(what) + ": n=" + std::to_string(n) +
                        " outside the supported range 1.." + std::to_string(max_n));
  }
}

// Fills an n^dims array (dims 2 or 3) so that every axis-parallel line is a
// permutation, in lexicographic cell order with the least symbol first.
class LatinFiller {
 public:
  LatinFiller(int n, int dims)
      : n_(n), dims_(dims), total_(dims == 2 ? n * n : n * n * n), cells_(total_, 0),
        masks_(3 * static_cast<std::size_t>(n) * n, 0) {}

  int total() const { return total_; }

  // Calls emit(cells) for every consistent filling of cells [0, stop) that
  // extends `prefix`. Returns false if the prefix itself clashes.
  template <class Emit>
  bool run(std::span<const Symbol> prefix, int stop, Emit&& emit) {
    std::fill(masks_.begin(), masks_.end(), 0);
    const int fixed = std::min<int>(static_cast<int>(prefix.size()), stop);
    for (int i = 0; i < fixed; ++i) {
      if (prefix[i] >= n_ || !fits(i, prefix[i])) return false;
      place(i, prefix[i]);
    }
    descend(fixed, stop, emit);
    return true;
  }

 private:
  // Line slots touched by cell i: for dims 3 the (a,b,*), (a,*,c), (*,b,c)
  // lines; for dims 2 the row and column.
  std::array<std::size_t, 3> lines(int i) const {
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    if (dims_ == 2) {
      const int r = i / n_, c = i % n_;
      return {static_cast<std::size_t>(r), nn + c, nn + c};
    }
    const int a = i / (n_ * n_), b = (i / n_) % n_, c = i % n_;
    return {static_cast<std::size_t>(a) * n_ + b, nn + static_cast<std::size_t>(a) * n_ + c,
            2 * nn + static_cast<std::size_t>(b) * n_ + c};
  }

  bool fits(int i, Symbol v) const {
    const std::uint32_t bit = 1u << v;
    for (std::size_t l : lines(i)) {
      if (masks_[l] & bit) return false;
    }
    return true;
  }
  void place(int i, Symbol v) {
    cells_[i] = v;
    for (std::size_t l : lines(i)) masks_[l] |= 1u << v;
  }
  void unplace(int i, Symbol v) {
    for (std::size_t l : lines(i)) masks_[l] &= ~(1u << v);
  }

  template <class Emit>
  void descend(int i, int stop, Emit& emit) {
    if (i == stop) {
      emit(std::span<const Symbol>(cells_.data(), static_cast<std::size_t>(stop)));
      return;
    }
    for (int v = 0; v < n_; ++v) {
      const auto s = static_cast<Symbol>(v);
      if (!fits(i, s)) continue;
      place(i, s);
      descend(i + 1, stop, emit);
      unplace(i, s);
    }
  }

  int n_;
  int dims_;
  int total_;
  std::vector<Symbol> cells_;
  std::vector<std::uint32_t> masks_;
};

std::vector<std::vector<Symbol>> enumerate_latin(int n, int dims, const SearchOptions& opts) {
  LatinFiller probe(n, dims);
  const int total = probe.total();
  if (static_cast<int>(opts.prefix.size()) > total) {
    throw std::invalid_argument("prefix longer than the table");
  }
  // Shard on the first row (squares) or first slice (cubes), refined by any
  // longer user prefix.
  const int split = std::max<int>(static_cast<int>(opts.prefix.size()),
                                  std::min(total, dims == 2 ? n : n * n));
  std::vector<std::vector<Symbol>> shards;
  probe.run(opts.prefix, split, [&](std::span<const Symbol> c) {
    shards.emplace_back(c.begin(), c.end());
  });
  auto chunks = parallel_map(shards.size(), opts.jobs, [&](std::size_t k) {
    std::vector<std::vector<Symbol>> found;
    LatinFiller filler(n, dims);
    filler.run(shards[k], total, [&](std::span<const Symbol> c) {
      found.emplace_back(c.begin(), c.end());
    });
    return found;
  });
  std::vector<std::vector<Symbol>> out;
  for (auto& chunk : chunks) {
    for (auto& t : chunk) out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t fnv1a(std::span<const Symbol> cells, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull ^ (seed * 0x9E3779B97F4A7C15ull);
  for (Symbol s : cells) {
    h ^= s;
    h *= 1099511628211ull;
  }
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 32;
  return h;
}

std::vector<TernaryTable> as_tables(int n, std::vector<std::vector<Symbol>> raw) {
  std::vector<TernaryTable> out;
  out.reserve(raw.size());
  for (auto& c : raw) out.emplace_back(n, std::move(c));
  return out;
}

std::vector<TernaryTable> all_cubes(int n, const SearchOptions& opts) {
  SearchOptions plain = opts;
  plain.prefix.clear();
  return as_tables(n, enumerate_latin(n, 3, plain));
}

std::vector<TernaryTable> components(int n, Target which, const SearchOptions& opts) {
  std::vector<TernaryTable> out;
  for (auto& t : all_cubes(n, opts)) {
    if (which == Target::Horizontal ? check_horizontal(t) : check_vertical(t)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Backtracking over product cells for one tribracket. Symbols first, then
// the hole branch, so products come out in canonical order.
class ProductSearch {
 public:
  ProductSearch(const TernaryTable& h, const TernaryTable& v, int holes, Partiality mode)
      : h_(h), v_(v), n_(h.size()), holes_(holes), mode_(mode),
        cells_(static_cast<std::size_t>(n_) * n_, detail::kUnknown), row_(n_, 0), col_(n_, 0) {}

  std::vector<PartialProduct> run() {
    found_.clear();
    descend(0, 0);
    return std::move(found_);
  }

 private:
  bool consistent() const {
    auto cell = [this](int a, int b) { return cells_[static_cast<std::size_t>(a) * n_ + b]; };
    return detail::scan_product_axioms(h_, v_, cell, mode_, detail::Family::Both,
                                       [](Axiom) { return false; });
  }

  void descend(int i, int used) {
    const int total = n_ * n_;
    if (used > holes_ || used + (total - i) < holes_) return;
    if (i == total) {
      std::vector<Symbol> out(cells_.size());
      for (std::size_t k = 0; k < cells_.size(); ++k) {
        out[k] = cells_[k] < 0 ? PartialProduct::kUndefined : static_cast<Symbol>(cells_[k]);
      }
      found_.emplace_back(n_, std::move(out));
      return;
    }
    const int a = i / n_, b = i % n_;
    for (int s = 0; s < n_; ++s) {
      const std::uint32_t bit = 1u << s;
      if ((row_[a] & bit) || (col_[b] & bit)) continue;
      cells_[i] = s;
      row_[a] |= bit;
      col_[b] |= bit;
      if (consistent()) descend(i + 1, used);
      row_[a] &= ~bit;
      col_[b] &= ~bit;
    }
    cells_[i] = detail::kHole;
    if (consistent()) descend(i + 1, used + 1);
    cells_[i] = detail::kUnknown;
  }

  const TernaryTable& h_;
  const TernaryTable& v_;
  int n_;
  int holes_;
  Partiality mode_;
  std::vector<int> cells_;
  std::vector<std::uint32_t> row_, col_;
  std::vector<PartialProduct> found_;
};

void require_no_prefix(const SearchOptions& opts) {
  if (!opts.prefix.empty()) {
    throw std::invalid_argument("prefix sharding applies to Latin square/cube searches only");
  }
}

}  // namespace

bool sampled(const TernaryTable& t, const SearchOptions& opts) {
  if (opts.sample_fraction >= 1.0) return true;
  constexpr std::uint64_t kScale = 1'000'000;
  return fnv1a(t.cells(), opts.sample_seed) % kScale <
         static_cast<std::uint64_t>(opts.sample_fraction * kScale);
}

Catalog enumerate_latin_squares(int n, const SearchOptions& opts) {
  guard(n, 5, opts, "enumerate_latin_squares");
  Catalog cat{{n, Target::LatinSquare}, {}};
  for (auto& cells : enumerate_latin(n, 2, opts)) {
    cat.entries.push_back({n, std::nullopt, std::nullopt, PartialProduct(n, std::move(cells))});
  }
  return cat;
}

Catalog enumerate_latin_cubes(int n, const SearchOptions& opts) {
  guard(n, 4, opts, "enumerate_latin_cubes");
  Catalog cat{{n, Target::LatinCube}, {}};
  for (auto& t : as_tables(n, enumerate_latin(n, 3, opts))) {
    cat.entries.push_back({n, std::move(t), std::nullopt, std::nullopt});
  }
  return cat;
}

Catalog enumerate_tribracket_components(int n, Target which, const SearchOptions& opts) {
  guard(n, 4, opts, "enumerate_tribracket_components");
  if (which != Target::Horizontal && which != Target::Vertical) {
    throw std::invalid_argument("component target must be HORIZONTAL or VERTICAL");
  }
  require_no_prefix(opts);
  Catalog cat{{n, which}, {}};
  for (auto& t : components(n, which, opts)) {
    cat.entries.push_back({n, std::move(t), std::nullopt, std::nullopt});
  }
  return cat;
}

Catalog enumerate_virtual_tribrackets(int n, PairDomain domain, const SearchOptions& opts) {
  guard(n, 4, opts, "enumerate_virtual_tribrackets");
  require_no_prefix(opts);
  std::vector<TernaryTable> outer, inner;
  if (domain == PairDomain::Prefiltered) {
    outer = components(n, Target::Horizontal, opts);
    inner = components(n, Target::Vertical, opts);
  } else {
    outer = all_cubes(n, opts);
    inner = outer;
  }
  std::erase_if(outer, [&](const TernaryTable& t) { return !sampled(t, opts); });

  auto chunks = parallel_map(outer.size(), opts.jobs, [&](std::size_t k) {
    std::vector<Structure> found;
    const TernaryTable& h = outer[k];
    if (domain == PairDomain::AllCubes && !check_horizontal(h)) return found;
    for (const TernaryTable& v : inner) {
      const bool ok = domain == PairDomain::Prefiltered
                          ? check_mixed(h, v)
                          : check_vertical(v) && check_mixed(h, v);
      if (ok) found.push_back({n, h, v, std::nullopt});
    }
    return found;
  });
  Catalog cat{{n, Target::VirtualTribracket, 0, domain}, {}};
  for (auto& chunk : chunks) {
    for (auto& s : chunk) cat.entries.push_back(std::move(s));
  }
  return cat;
}

Catalog search_vnalgebras(int n, int holes, Partiality mode, const SearchOptions& opts) {
  guard(n, 4, opts, "search_vnalgebras");
  if (holes < 0 || holes > n * n) {
    throw std::invalid_argument("holes must lie in [0, n^2]");
  }
  const Catalog tribrackets = enumerate_virtual_tribrackets(n, PairDomain::Prefiltered, opts);
  auto chunks = parallel_map(tribrackets.count(), opts.jobs, [&](std::size_t k) {
    const Structure& t = tribrackets.entries[k];
    std::vector<Structure> found;
    for (auto& p : ProductSearch(*t.horizontal, *t.vertical, holes, mode).run()) {
      found.push_back({n, t.horizontal, t.vertical, std::move(p)});
    }
    return found;
  });
  Catalog cat{{n, Target::VNAlgebra, holes, PairDomain::Prefiltered, mode}, {}};
  for (auto& chunk : chunks) {
    for (auto& s : chunk) cat.entries.push_back(std::move(s));
  }
  return cat;
}

Catalog run_search(const SearchSpec& spec, const SearchOptions& opts) {
  switch (spec.target) {
    case Target::LatinSquare: return enumerate_latin_squares(spec.n, opts);
    case Target::LatinCube: return enumerate_latin_cubes(spec.n, opts);
    case Target::Horizontal:
    case Target::Vertical: return enumerate_tribracket_components(spec.n, spec.target, opts);
    case Target::VirtualTribracket:
      return enumerate_virtual_tribrackets(spec.n, spec.pair_domain, opts);
    case Target::VNAlgebra: return search_vnalgebras(spec.n, spec.holes, spec.partiality, opts);
  }
  throw std::invalid_argument("unknown search target");
}

PairStats pair_stats(const Catalog& tribrackets) {
  std::set<TernaryTable> hs, vs, all;
  for (const auto& e : tribrackets.entries) {
    if (e.horizontal) {
      hs.insert(*e.horizontal);
      all.insert(*e.horizontal);
    }
    if (e.vertical) {
      vs.insert(*e.vertical);
      all.insert(*e.vertical);
    }
  }
  return {tribrackets.count(), hs.size(), vs.size(), all.size()};
}

std::size_t count_mixed_pairs(int n, PairDomain domain, const SearchOptions& opts) {
  guard(n, domain == PairDomain::AllCubes ? 3 : 4, opts, "count_mixed_pairs");
  std::vector<TernaryTable> hs, vs;
  if (domain == PairDomain::AllCubes) {
    hs = all_cubes(n, opts);
    vs = hs;
  } else {
    hs = components(n, Target::Horizontal, opts);
    vs = components(n, Target::Vertical, opts);
  }
  auto counts = parallel_map(hs.size(), opts.jobs, [&](std::size_t k) {
    std::size_t c = 0;
    for (const auto& v : vs) c += check_mixed(hs[k], v) ? 1 : 0;
    return c;
  });
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::size_t distinct_products(const Catalog& algebras) {
  std::set<PartialProduct> ps;
  for (const auto& e : algebras.entries) {
    if (e.product) ps.insert(*e.product);
  }
  return ps.size();
}

}  // namespace vnalg
