#include "vnalg/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "vnalg/coloring.hpp"
#include "vnalg/enumeration.hpp"
#include "vnalg/io.hpp"
#include "vnalg/moves.hpp"
#include "vnalg/reproduce.hpp"

namespace vnalg::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  int n = 0;
  int holes = 0;
  std::string variant = "matched";
  std::string domain = "prefiltered";
  std::string out_path;
  int jobs = 1;
  bool allow_large = false;
  std::string algebra_path;
  std::string diagram_path;
  bool enumerate = false;
  bool tangle = false;
  bool brute_force = false;
  std::string moves = "all";
  int seeds = 100;
};

Partiality variant_of(const Options& o) {
  return o.variant == "vacuous" ? Partiality::Vacuous : Partiality::Matched;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.jobs = o.jobs;
  s.allow_large = o.allow_large;
  return s;
}

void emit_catalog(const Catalog& c, const Options& o, std::ostream& out) {
  out << "count=" << c.count() << "\n";
  if (!o.out_path.empty()) io::write_file(o.out_path, io::format_catalog(c));
}

void warn_if_invalid(const VirtualNAlgebra& alg, std::ostream& err) {
  auto bad = failing_axioms(alg);
  if (bad.empty()) return;
  err << "warning: algebra fails";
  for (Axiom a : bad) err << " " << label(a);
  err << "\n";
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto opts = search_options(o);
  emit_catalog(o.kind == "squares" ? enumerate_latin_squares(o.n, opts) : enumerate_latin_cubes(o.n, opts),
               o, out);
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  auto opts = search_options(o);
  if (o.kind == "horizontal" || o.kind == "vertical") {
    emit_catalog(enumerate_tribracket_components(
                     o.n, o.kind == "horizontal" ? Target::Horizontal : Target::Vertical, opts),
                 o, out);
  } else if (o.kind == "tribrackets") {
    auto domain = o.domain == "all-cubes" ? PairDomain::AllCubes : PairDomain::Prefiltered;
    Catalog c = enumerate_virtual_tribrackets(o.n, domain, opts);
    emit_catalog(c, o, out);
    out << "distinct_cubes=" << pair_stats(c).distinct_cubes << "\n";
  } else {
    emit_catalog(search_vnalgebras(o.n, o.holes, variant_of(o), opts), o, out);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Structure s = io::load_structure(o.algebra_path);
  std::vector<Axiom> bad;
  if (s.horizontal && s.vertical && s.product) {
    bad = failing_axioms(to_algebra(s), variant_of(o));
  } else if (s.horizontal && s.vertical) {
    bad = failing_axioms(to_tribracket(s));
  } else if (s.horizontal || s.vertical) {
    const TernaryTable& t = s.horizontal ? *s.horizontal : *s.vertical;
    for (Axiom a : failing_axioms(VirtualTribracket{t, t})) {
      bool horizontal = a == Axiom::LatinHorizontal || a == Axiom::III_i || a == Axiom::III_ii;
      bool vertical = a == Axiom::LatinVertical || a == Axiom::vII || a == Axiom::vIII_i ||
                      a == Axiom::vIII_ii;
      if (s.horizontal ? horizontal : vertical) bad.push_back(a);
    }
  } else if (!is_partial_latin_square(*s.product)) {
    bad.push_back(Axiom::LatinProduct);
  }
  if (bad.empty()) {
    out << "ok\n";
    return kExitOk;
  }
  for (Axiom a : bad) out << "FAIL " << label(a) << "\n";
  return kExitCheckFailed;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  Diagram d = io::load_diagram(o.diagram_path);
  auto report = validate(d);
  if (!report.ok()) {
    for (const auto& p : report.problems) err << o.diagram_path << ": " << p << "\n";
    throw InputError("invalid diagram");
  }
  if (d.is_tangle() && !o.tangle) throw InputError("diagram has legs; pass --tangle");
  VirtualNAlgebra alg = io::load_algebra(o.algebra_path);
  warn_if_invalid(alg, err);
  ColoringCount c = o.brute_force ? brute_force_count(d, alg, o.enumerate)
                    : d.is_tangle() ? count_tangle_colorings(d, alg, o.enumerate)
                                    : count_colorings(d, alg, o.enumerate);
  out << "phi=" << c.value << "\n";
  if (c.colorings)
    for (const auto& col : *c.colorings) out << io::format_coloring(col) << "\n";
  return kExitOk;
}

int cmd_invariance(const Options& o, std::ostream& out, std::ostream& err) {
  VirtualNAlgebra alg = io::load_algebra(o.algebra_path);
  warn_if_invalid(alg, err);
  std::vector<Move> moves;
  if (o.moves == "all") {
    moves = all_moves();
  } else {
    std::stringstream ss(o.moves);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto m = parse_move(name);
      if (!m) throw InputError("unknown move " + name);
      if (*m == Move::VirtualR4)
        throw DiagramError(DiagramError::Code::ForbiddenMove, "VR4 is a forbidden move");
      moves.push_back(*m);
    }
  }
  std::size_t total_failures = 0;
  for (Move m : moves) {
    for (int orient = 0; orient < orientation_count(m); ++orient) {
      std::size_t failures = 0;
      for (int seed = 0; seed < o.seeds; ++seed) {
        MovePair p = move_pair(m, static_cast<std::uint64_t>(seed), orient);
        failures += count_colorings(p.before, alg).value != count_colorings(p.after, alg).value;
      }
      out << to_string(m);
      if (orientation_count(m) > 1) out << "/" << orient;
      out << " pairs=" << o.seeds << " failures=" << failures << "\n";
      total_failures += failures;
    }
  }
  return total_failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  auto rows = reproduce_paper(o.jobs);
  out << format_rows(rows);
  return std::ranges::all_of(rows, &ReproRow::pass) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Virtual Niebrzydowski algebra enumeration and graph coloring counts", "vnalg"};
  app.require_subcommand(1, 1);
  const auto positive = CLI::PositiveNumber;
  auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "worker threads")->check(positive); };
  auto add_variant = [&](CLI::App* c) {
    c->add_option("--variant", o.variant, "partiality convention")
        ->check(CLI::IsMember({"vacuous", "matched"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "enumerate Latin squares or cubes");
  enumerate->add_option("kind", o.kind)->required()->check(CLI::IsMember({"squares", "cubes"}));
  enumerate->add_option("--n", o.n, "carrier size")->required()->check(positive);
  enumerate->add_option("--out", o.out_path, "catalog output path");
  enumerate->add_flag("--allow-large", o.allow_large, "lift the size guard");
  add_jobs(enumerate);

  auto* search = app.add_subcommand("search", "search tribracket components, pairs or algebras");
  search->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"horizontal", "vertical", "tribrackets", "vnalg"}));
  search->add_option("--n", o.n, "carrier size")->required()->check(positive);
  search->add_option("--holes", o.holes, "undefined product cells")->check(CLI::NonNegativeNumber);
  search->add_option("--domain", o.domain, "pair domain for tribrackets")
      ->check(CLI::IsMember({"prefiltered", "all-cubes"}));
  search->add_option("--out", o.out_path, "catalog output path");
  search->add_flag("--allow-large", o.allow_large, "lift the size guard");
  add_variant(search);
  add_jobs(search);

  auto* verify = app.add_subcommand("verify", "list the failing axioms of an algebra file");
  verify->add_option("--algebra", o.algebra_path, "algebra file")->required();
  add_variant(verify);

  auto* color = app.add_subcommand("color", "count colorings of a diagram");
  color->add_option("--diagram", o.diagram_path, "diagram file")->required();
  color->add_option("--algebra", o.algebra_path, "algebra file")->required();
  color->add_flag("--enumerate", o.enumerate, "print every coloring");
  color->add_flag("--tangle", o.tangle, "allow boundary legs");
  color->add_flag("--brute-force", o.brute_force, "use the exhaustive oracle");

  auto* invariance = app.add_subcommand("invariance-test", "compare counts across move pairs");
  invariance->add_option("--algebra", o.algebra_path, "algebra file")->required();
  invariance->add_option("--moves", o.moves, "comma-separated move names, or all");
  invariance->add_option("--seeds", o.seeds, "seeds per move")->check(positive);

  auto* reproduce = app.add_subcommand("reproduce-paper", "recompute every reference count");
  add_jobs(reproduce);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (color->parsed()) return cmd_color(o, out, err);
    if (invariance->parsed()) return cmd_invariance(o, out, err);
    return cmd_reproduce(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CorruptStructure& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace vnalg::cli
