#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "vnalg/algebra.hpp"
#include "vnalg/enumeration.hpp"
#include "vnalg/fixtures.hpp"

using namespace vnalg;

namespace {

bool has(const std::vector<Axiom>& v, Axiom a) { return std::ranges::find(v, a) != v.end(); }

PartialProduct product_rows(std::vector<std::vector<std::optional<int>>> rows) {
  return PartialProduct::from_one_based(rows);
}

}  // namespace

TEST_CASE("latin cube predicate") {
  const auto n3 = fixtures::n3_algebra();
  CHECK(is_latin_cube(trivial_table()));
  CHECK(is_latin_cube(n3.horizontal()));
  TernaryTable broken = n3.horizontal();
  broken.set(0, 0, 0, 1);
  CHECK_FALSE(is_latin_cube(broken));
  CHECK_FALSE(is_latin_cube(TernaryTable(2)));
}

TEST_CASE("partial latin square predicate") {
  CHECK(is_partial_latin_square(fixtures::n4_algebra().product));
  CHECK(is_partial_latin_square(PartialProduct(4)));
  constexpr std::optional<int> u;
  CHECK_FALSE(is_partial_latin_square(product_rows({{3, 3, u, u}, {u, u, u, u}, {u, u, u, u}, {u, u, u, u}})));
  CHECK_FALSE(is_partial_latin_square(product_rows({{1, u}, {1, u}})));
  CHECK_FALSE(is_latin_square(fixtures::n4_algebra().product));
  CHECK(is_latin_square(fixtures::n3_algebra().product));
  CHECK(PartialProduct(4).holes() == 16);
  CHECK(fixtures::n4_algebra().product.holes() == 6);
}

TEST_CASE("tribracket checkers on fixtures") {
  const auto n3 = fixtures::n3_algebra();
  CHECK(check_horizontal(trivial_table()));
  CHECK(check_vertical(trivial_table()));
  CHECK(check_mixed(trivial_table(), trivial_table()));
  CHECK(check_horizontal(n3.horizontal()));
  CHECK(check_vertical(n3.vertical()));
  CHECK(check_mixed(n3.horizontal(), n3.vertical()));
  CHECK(is_virtual_tribracket(n3.tribracket));
  CHECK(is_virtual_nalgebra(n3));
  CHECK(is_virtual_nalgebra(n3, Partiality::Vacuous));
  CHECK(failing_axioms(n3).empty());
}

TEST_CASE("product checkers") {
  const auto n3 = fixtures::n3_algebra();
  const auto n4 = fixtures::n4_algebra();
  CHECK(check_product_classical(n3.horizontal(), n3.product));
  CHECK(check_product_virtual(n3.vertical(), n3.product));
  for (auto mode : {Partiality::Vacuous, Partiality::Matched}) {
    CHECK(check_product_classical(n4.horizontal(), PartialProduct(4), mode));
    CHECK(check_product_virtual(n4.vertical(), PartialProduct(4), mode));
  }
  // R4 instance a=1, b=1: ab=3 and [1,3,1]=3.
  CHECK(n4.horizontal()(0, *n4.product(0, 0), 0) == *n4.product(0, 0));
  PartialProduct mutated = n4.product;
  mutated.set(3, 3, std::nullopt);
  mutated.set(0, 1, 1);
  CHECK_FALSE(check_product_virtual(n4.vertical(), mutated));
}

TEST_CASE("N4 fixture reports its failing axioms") {
  const auto n4 = fixtures::n4_algebra();
  auto bad = failing_axioms(n4);
  CHECK(has(bad, Axiom::R4));
  CHECK_FALSE(has(bad, Axiom::LatinHorizontal));
  CHECK_FALSE(has(bad, Axiom::LatinProduct));
  CHECK(is_virtual_tribracket(n4.tribracket));
  VirtualNAlgebra swapped{{n4.vertical(), n4.horizontal()}, n4.product};
  CHECK_FALSE(is_virtual_nalgebra(swapped));
}

TEST_CASE("failing_axioms on malformed structures") {
  VirtualNAlgebra alg{{trivial_table(), TernaryTable::from_one_based({{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}})},
                      PartialProduct(1)};
  auto bad = failing_axioms(alg);
  CHECK(has(bad, Axiom::LatinVertical));
  CHECK(label(Axiom::vR5_4) == "vR5.4");
  CHECK(label(Axiom::m_ii) == "m.ii");
}

TEST_CASE("solve_ternary") {
  const auto n3 = fixtures::n3_algebra();
  const auto& h = n3.horizontal();
  CHECK(solve_ternary(h, TernaryRole::D, {0, 1, 2}) == 1);
  CHECK(solve_ternary(h, TernaryRole::C, {0, 0, 0}) == 0);
  CHECK(solve_ternary(trivial_table(), TernaryRole::A, {0, 0, 0}) == 0);
}

TEST_CASE("solve_product") {
  const auto n4 = fixtures::n4_algebra();
  const auto& p = n4.product;
  CHECK(solve_product(p, ProductRole::C, {3, 3}) == std::optional<Symbol>(1));
  CHECK_FALSE(solve_product(p, ProductRole::C, {0, 1}).has_value());
  CHECK(solve_product(p, ProductRole::A, {0, 3}) == std::optional<Symbol>(3));
  constexpr std::optional<int> u;
  CHECK_THROWS_AS(solve_product(product_rows({{1, u}, {1, u}}), ProductRole::A, {0, 0}),
                  CorruptStructure);
}

TEST_CASE("property: solve_ternary round-trips every role") {
  for (const auto& s : enumerate_latin_cubes(3).entries) {
    const auto& t = *s.horizontal;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          const Symbol d = t(a, b, c);
          const Symbol sa = a, sb = b, sc = c;
          REQUIRE(solve_ternary(t, TernaryRole::D, {sa, sb, sc}) == d);
          REQUIRE(solve_ternary(t, TernaryRole::A, {sb, sc, d}) == a);
          REQUIRE(solve_ternary(t, TernaryRole::B, {sa, sc, d}) == b);
          REQUIRE(solve_ternary(t, TernaryRole::C, {sa, sb, d}) == c);
        }
  }
}

TEST_CASE("property: checkers agree with quadruple-loop oracle on all n=3 cubes") {
  auto cubes = enumerate_latin_cubes(3).entries;
  REQUIRE(cubes.size() == 24);
  for (const auto& h : cubes) {
    REQUIRE(oracle::latin_cube(*h.horizontal));
    CHECK(check_horizontal(*h.horizontal) == oracle::horizontal_ok(*h.horizontal));
    CHECK(check_vertical(*h.horizontal) == oracle::vertical_ok(*h.horizontal));
    for (const auto& v : cubes)
      CHECK(check_mixed(*h.horizontal, *v.horizontal) == oracle::mixed_ok(*h.horizontal, *v.horizontal));
  }
}

TEST_CASE("property: product checkers agree with oracle on random partial products") {
  oracle::Gen gen(7);
  auto pairs = enumerate_virtual_tribrackets(3, PairDomain::Prefiltered).entries;
  const auto n4 = fixtures::n4_algebra();
  for (int trial = 0; trial < 600; ++trial) {
    const bool small = trial % 2 == 0;
    VirtualTribracket tb =
        small ? to_tribracket(pairs[static_cast<std::size_t>(gen.below(static_cast<int>(pairs.size())))])
              : n4.tribracket;
    const int n = tb.size();
    // Random partial Latin square: shuffled rows of a cyclic square, then holes.
    auto rows = gen.permutation(n), syms = gen.permutation(n);
    PartialProduct p(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (gen.below(3) != 0) p.set(a, b, syms[(rows[a] + b) % n]);
    for (auto mode : {Partiality::Vacuous, Partiality::Matched}) {
      VirtualNAlgebra alg{tb, p};
      CAPTURE(trial);
      CHECK(is_virtual_nalgebra(alg, mode) == oracle::nalgebra_ok(alg, mode));
      CHECK(check_product_classical(tb.horizontal, p, mode) ==
            (oracle::r4_ok(tb.horizontal, p) && oracle::r5_family_ok(tb.horizontal, p, mode)));
      CHECK(check_product_virtual(tb.vertical, p, mode) == oracle::r5_family_ok(tb.vertical, p, mode));
    }
  }
}

TEST_CASE("property: matched is at least as strict as vacuous") {
  oracle::Gen gen(11);
  auto pairs = enumerate_virtual_tribrackets(3, PairDomain::Prefiltered).entries;
  for (int trial = 0; trial < 400; ++trial) {
    auto tb = to_tribracket(pairs[static_cast<std::size_t>(gen.below(static_cast<int>(pairs.size())))]);
    PartialProduct p(3);
    auto syms = gen.permutation(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (gen.coin()) p.set(a, b, syms[(a + b) % 3]);
    VirtualNAlgebra alg{tb, p};
    if (is_virtual_nalgebra(alg, Partiality::Matched)) CHECK(is_virtual_nalgebra(alg, Partiality::Vacuous));
  }
}

TEST_CASE("property: checkers are invariant under relabeling") {
  oracle::Gen gen(3);
  const auto n3 = fixtures::n3_algebra();
  const auto n4 = fixtures::n4_algebra();
  auto cubes = enumerate_latin_cubes(3).entries;
  for (int trial = 0; trial < 100; ++trial) {
    auto perm3 = gen.permutation(3);
    auto perm4 = gen.permutation(4);
    const auto& t = *cubes[static_cast<std::size_t>(gen.below(24))].horizontal;
    auto rt = relabel(t, perm3);
    CHECK(is_latin_cube(rt));
    CHECK(check_horizontal(rt) == check_horizontal(t));
    CHECK(check_vertical(rt) == check_vertical(t));
    CHECK(check_mixed(rt, relabel(n3.vertical(), perm3)) == check_mixed(t, n3.vertical()));
    CHECK(is_virtual_nalgebra(relabel(n3, perm3)));
    CHECK(failing_axioms(relabel(n4, perm4)) == failing_axioms(n4));
  }
}

TEST_CASE("property: empty product passes for every valid tribracket pair") {
  for (const auto& s : enumerate_virtual_tribrackets(3, PairDomain::Prefiltered).entries) {
    auto tb = to_tribracket(s);
    CHECK(check_product_classical(tb.horizontal, PartialProduct(3)));
    CHECK(check_product_virtual(tb.vertical, PartialProduct(3)));
  }
}

TEST_CASE("partiality names") {
  CHECK(to_string(Partiality::Matched) == "MATCHED");
  CHECK(parse_partiality("vacuous") == Partiality::Vacuous);
  CHECK_FALSE(parse_partiality("strict").has_value());
  CHECK(kDefaultPartiality == Partiality::Matched);
}
