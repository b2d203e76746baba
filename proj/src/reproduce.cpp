#include "vnalg/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "vnalg/coloring.hpp"
#include "vnalg/enumeration.hpp"
#include "vnalg/fixtures.hpp"

namespace vnalg {

namespace {

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

template <class T>
ReproRow row(std::string id, std::string check, const T& expected, const T& observed) {
  std::ostringstream e, o;
  e << expected;
  o << observed;
  return {std::move(id), std::move(check), e.str(), o.str(), expected == observed};
}

ReproRow flag(std::string id, std::string check, bool ok, std::string observed) {
  return {std::move(id), std::move(check), "yes", ok ? "yes" : std::move(observed), ok};
}

std::string failing_names(const VirtualNAlgebra& alg) {
  std::string out;
  for (Axiom a : failing_axioms(alg)) out += (out.empty() ? "" : " ") + std::string(label(a));
  return out.empty() ? "none" : out;
}

}  // namespace

std::vector<ReproRow> reproduce_paper(int jobs) {
  SearchOptions opts;
  opts.jobs = jobs;
  std::vector<ReproRow> rows;

  std::vector<std::size_t> squares, cubes;
  for (int n : {1, 3, 4}) {
    squares.push_back(enumerate_latin_squares(n, opts).count());
    cubes.push_back(enumerate_latin_cubes(n, opts).count());
  }
  rows.push_back(row<std::string>("1a", "Latin squares n=1,3,4", "1,12,576", join_counts(squares)));
  rows.push_back(row<std::string>("1b", "Latin cubes n=1,3,4", "1,24,55296", join_counts(cubes)));

  rows.push_back(row<std::size_t>("2a", "horizontal-valid cubes n=3", 12,
                                  enumerate_tribracket_components(3, Target::Horizontal, opts).count()));
  rows.push_back(row<std::size_t>("2b", "vertical-valid cubes n=3", 6,
                                  enumerate_tribracket_components(3, Target::Vertical, opts).count()));
  rows.push_back(row<std::size_t>("2c", "virtual tribracket pairs n=3 (PREFILTERED)", 24,
                                  enumerate_virtual_tribrackets(3, PairDomain::Prefiltered, opts).count()));

  PairStats stats = pair_stats(enumerate_virtual_tribrackets(4, PairDomain::Prefiltered, opts));
  rows.push_back(row<std::size_t>("3", "virtual tribracket pairs n=4", 1080, stats.pairs));

  const VirtualNAlgebra n3 = fixtures::n3_algebra();
  const VirtualNAlgebra n4 = fixtures::n4_algebra();
  Catalog full3 = search_vnalgebras(3, 0, kDefaultPartiality, opts);
  rows.push_back(row<std::size_t>("4a", "algebras n=3 holes=0", 1, full3.count()));
  rows.push_back(flag("4b", "n=3 algebra equals the n3 fixture",
                      full3.count() == 1 && full3.entries[0] == to_structure(n3), "no"));
  std::vector<std::size_t> low;
  for (int h = 0; h <= 5; ++h) low.push_back(search_vnalgebras(4, h, kDefaultPartiality, opts).count());
  rows.push_back(row<std::string>("4c", "algebras n=4 holes=0..5", "0,0,0,0,0,0", join_counts(low)));
  Catalog six = search_vnalgebras(4, 6, kDefaultPartiality, opts);
  rows.push_back(row<std::size_t>("4d", "algebras n=4 holes=6", 368, six.count()));
  rows.push_back(flag("4e", "n=4 holes=6 catalog contains N4",
                      std::ranges::binary_search(six.entries, to_structure(n4)), "no"));

  rows.push_back(flag("5a", "n3 fixture is a virtual Niebrzydowski algebra",
                      is_virtual_nalgebra(n3), failing_names(n3)));
  rows.push_back(flag("5b", "N4 is a virtual Niebrzydowski algebra", is_virtual_nalgebra(n4),
                      failing_names(n4)));
  std::size_t mutants = 0, rejected = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto v = n4.product(a, b);
      if (!v) continue;
      for (Symbol s = 0; s < 4; ++s) {
        if (s == *v) continue;
        VirtualNAlgebra m = n4;
        m.product.set(a, b, s);
        ++mutants;
        rejected += !failing_axioms(m).empty();
      }
    }
  rows.push_back(row<std::string>("5c", "single-cell N4 product mutants rejected", "30/30",
                                  std::to_string(rejected) + "/" + std::to_string(mutants)));

  rows.push_back(row<std::uint64_t>("6a", "fig4_tangle N4 colorings", 8,
                                    count_tangle_colorings(fixtures::fig4_tangle(), n4).value));
  std::vector<std::size_t> fig5;
  for (char c : {'A', 'B', 'C', 'D'}) fig5.push_back(count_colorings(fixtures::fig5(c), n4).value);
  rows.push_back(row<std::string>("6b", "fig5_A..D N4 colorings", "5,1,5,0", join_counts(fig5)));
  std::size_t catalog3 = 0, nine = 0;
  const Diagram unknot = fixtures::unknot();
  for (int h = 0; h <= 9; ++h)
    for (const auto& s : search_vnalgebras(3, h, kDefaultPartiality, opts).entries) {
      ++catalog3;
      nine += count_colorings(unknot, to_algebra(s)).value == 9;
    }
  rows.push_back(row<std::string>("6c", "unknot has 9 colorings, n=3 catalog algebras",
                                  std::to_string(catalog3) + "/" + std::to_string(catalog3),
                                  std::to_string(nine) + "/" + std::to_string(catalog3)));

  auto a = count_colorings(fixtures::fig5('A'), n4, true);
  auto c = count_colorings(fixtures::fig5('C'), n4, true);
  rows.push_back(flag("9", "fig5_A, fig5_C: equal counts, different coloring sets",
                      a.value == c.value && a.colorings != c.colorings,
                      std::to_string(a.value) + " vs " + std::to_string(c.value)));
  return rows;
}

std::string format_rows(const std::vector<ReproRow>& rows) {
  std::size_t wid = 2, wc = 5, we = 8, wo = 8;
  for (const auto& r : rows) {
    wid = std::max(wid, r.id.size());
    wc = std::max(wc, r.check.size());
    we = std::max(we, r.expected.size());
    wo = std::max(wo, r.observed.size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& id, const std::string& check, const std::string& e,
                  const std::string& o, const std::string& verdict) {
    out << std::left;
    out.width(static_cast<std::streamsize>(wid));
    out << id << "  ";
    out.width(static_cast<std::streamsize>(wc));
    out << check << "  ";
    out.width(static_cast<std::streamsize>(we));
    out << e << "  ";
    out.width(static_cast<std::streamsize>(wo));
    out << o << "  " << verdict << "\n";
  };
  line("id", "check", "expected", "observed", "result");
  std::size_t passed = 0;
  for (const auto& r : rows) {
    line(r.id, r.check, r.expected, r.observed, r.pass ? "PASS" : "FAIL");
    passed += r.pass;
  }
  out << "passed " << passed << " of " << rows.size() << "\n";
  return out.str();
}

}  // namespace vnalg
