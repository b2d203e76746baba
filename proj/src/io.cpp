#include "vnalg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vnalg::io {

namespace {

using Json = nlohmann::ordered_json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

Json parse_json(std::string_view text, const std::string& source, std::size_t line_offset = 0) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string where = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    if (line_offset > 0) {
      auto colon = where.find(':');
      where = std::to_string(line_offset) + where.substr(colon);
    }
    throw ParseError(source, where, "syntax error");
  }
}

/// Field access with JSON-pointer diagnostics.
class Reader {
 public:
  Reader(const std::string& source, std::string prefix = "") : source_(source), prefix_(std::move(prefix)) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw ParseError(source_, prefix_ + (pointer.empty() ? "/" : pointer), what);
  }

  const Json& object(const Json& j, const std::string& ptr) const {
    if (!j.is_object()) fail(ptr, "expected an object");
    return j;
  }

  void only_keys(const Json& j, const std::string& ptr, std::initializer_list<std::string_view> keys) const {
    for (const auto& [k, v] : j.items()) {
      (void)v;
      bool known = false;
      for (auto key : keys) known = known || key == k;
      if (!known) fail(ptr + "/" + k, "unknown field");
    }
  }

  const Json& field(const Json& j, const std::string& ptr, const std::string& key) const {
    auto it = j.find(key);
    if (it == j.end()) fail(ptr + "/" + key, "missing field");
    return *it;
  }

  long integer(const Json& j, const std::string& ptr) const {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    return j.get<long>();
  }

  std::string string(const Json& j, const std::string& ptr) const {
    if (!j.is_string()) fail(ptr, "expected a string");
    return j.get<std::string>();
  }

  const Json& array(const Json& j, const std::string& ptr, std::optional<std::size_t> size = {}) const {
    if (!j.is_array()) fail(ptr, "expected an array");
    if (size && j.size() != *size)
      fail(ptr, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
    return j;
  }

  Symbol symbol(const Json& j, const std::string& ptr, int n) const {
    long v = integer(j, ptr);
    if (v < 1 || v > n) fail(ptr, "symbol " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<Symbol>(v - 1);
  }

 private:
  const std::string& source_;
  std::string prefix_;
};

std::string idx(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

Structure read_structure(const Json& j, const Reader& r) {
  r.object(j, "");
  r.only_keys(j, "", {"n", "horizontal", "vertical", "product"});
  long n = r.integer(r.field(j, "", "n"), "/n");
  if (n < 1 || n > kMaxCarrier) r.fail("/n", "carrier size must be in 1.." + std::to_string(kMaxCarrier));
  const auto un = static_cast<std::size_t>(n);
  Structure s;
  s.n = static_cast<int>(n);
  auto ternary = [&](const char* key) -> std::optional<TernaryTable> {
    if (!j.contains(key)) return std::nullopt;
    std::string ptr = std::string("/") + key;
    TernaryTable t(s.n);
    const Json& m = r.array(j.at(key), ptr, un);
    for (std::size_t a = 0; a < un; ++a) {
      const Json& rows = r.array(m[a], idx(ptr, a), un);
      for (std::size_t b = 0; b < un; ++b) {
        const Json& row = r.array(rows[b], idx(idx(ptr, a), b), un);
        for (std::size_t c = 0; c < un; ++c)
          t.set(a, b, c, r.symbol(row[c], idx(idx(idx(ptr, a), b), c), s.n));
      }
    }
    return t;
  };
  s.horizontal = ternary("horizontal");
  s.vertical = ternary("vertical");
  if (j.contains("product")) {
    PartialProduct p(s.n);
    const Json& rows = r.array(j.at("product"), "/product", un);
    for (std::size_t a = 0; a < un; ++a) {
      const Json& row = r.array(rows[a], idx("/product", a), un);
      for (std::size_t b = 0; b < un; ++b) {
        if (row[b].is_null()) continue;
        p.set(a, b, r.symbol(row[b], idx(idx("/product", a), b), s.n));
      }
    }
    s.product = p;
  }
  if (!s.horizontal && !s.vertical && !s.product) r.fail("", "no table given");
  return s;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string row_text(const TernaryTable& t, int a, int b) {
  std::vector<std::string> cells;
  for (int c = 0; c < t.size(); ++c) cells.push_back(std::to_string(t(a, b, c) + 1));
  return "[" + join(cells, ", ") + "]";
}

std::string matrix_text(const TernaryTable& t, int a) {
  std::vector<std::string> rows;
  for (int b = 0; b < t.size(); ++b) rows.push_back(row_text(t, a, b));
  return "[" + join(rows, ", ") + "]";
}

std::string product_row(const PartialProduct& p, int a) {
  std::vector<std::string> cells;
  for (int b = 0; b < p.size(); ++b) {
    auto v = p(a, b);
    cells.push_back(v ? std::to_string(*v + 1) : "null");
  }
  return "[" + join(cells, ", ") + "]";
}

Json spec_json(const SearchSpec& s) {
  Json j;
  j["n"] = s.n;
  j["target"] = std::string(to_string(s.target));
  j["holes"] = s.holes;
  j["pair_domain"] = std::string(to_string(s.pair_domain));
  j["partiality_variant"] = std::string(to_string(s.partiality));
  return j;
}

SearchSpec read_spec(const Json& j, const Reader& r) {
  const std::string p = "/spec";
  r.object(j, p);
  r.only_keys(j, p, {"n", "target", "holes", "pair_domain", "partiality_variant"});
  SearchSpec s;
  s.n = static_cast<int>(r.integer(r.field(j, p, "n"), p + "/n"));
  auto target = parse_target(r.string(r.field(j, p, "target"), p + "/target"));
  if (!target) r.fail(p + "/target", "unknown target");
  s.target = *target;
  s.holes = static_cast<int>(r.integer(r.field(j, p, "holes"), p + "/holes"));
  auto domain = parse_pair_domain(r.string(r.field(j, p, "pair_domain"), p + "/pair_domain"));
  if (!domain) r.fail(p + "/pair_domain", "unknown pair domain");
  s.pair_domain = *domain;
  auto variant = parse_partiality(r.string(r.field(j, p, "partiality_variant"), p + "/partiality_variant"));
  if (!variant) r.fail(p + "/partiality_variant", "unknown partiality variant");
  s.partiality = *variant;
  return s;
}

}  // namespace

Structure parse_structure(std::string_view text, const std::string& source) {
  return read_structure(parse_json(text, source), Reader(source));
}

std::string format_structure(const Structure& s) {
  std::vector<std::string> fields{"  \"n\": " + std::to_string(s.n)};
  auto ternary = [&](const char* key, const std::optional<TernaryTable>& t) {
    if (!t) return;
    std::vector<std::string> mats;
    for (int a = 0; a < s.n; ++a) mats.push_back("    " + matrix_text(*t, a));
    fields.push_back(std::string("  \"") + key + "\": [\n" + join(mats, ",\n") + "\n  ]");
  };
  ternary("horizontal", s.horizontal);
  ternary("vertical", s.vertical);
  if (s.product) {
    std::vector<std::string> rows;
    for (int a = 0; a < s.n; ++a) rows.push_back("    " + product_row(*s.product, a));
    fields.push_back("  \"product\": [\n" + join(rows, ",\n") + "\n  ]");
  }
  return "{\n" + join(fields, ",\n") + "\n}\n";
}

std::string format_structure_compact(const Structure& s) {
  std::vector<std::string> fields{"\"n\": " + std::to_string(s.n)};
  auto ternary = [&](const char* key, const std::optional<TernaryTable>& t) {
    if (!t) return;
    std::vector<std::string> mats;
    for (int a = 0; a < s.n; ++a) mats.push_back(matrix_text(*t, a));
    fields.push_back(std::string("\"") + key + "\": [" + join(mats, ", ") + "]");
  };
  ternary("horizontal", s.horizontal);
  ternary("vertical", s.vertical);
  if (s.product) {
    std::vector<std::string> rows;
    for (int a = 0; a < s.n; ++a) rows.push_back(product_row(*s.product, a));
    fields.push_back("\"product\": [" + join(rows, ", ") + "]");
  }
  return "{" + join(fields, ", ") + "}";
}

VirtualNAlgebra parse_algebra(std::string_view text, const std::string& source) {
  Structure s = parse_structure(text, source);
  for (auto [present, key] : {std::pair{s.horizontal.has_value(), "/horizontal"},
                              std::pair{s.vertical.has_value(), "/vertical"},
                              std::pair{s.product.has_value(), "/product"}})
    if (!present) throw ParseError(source, key, "missing field");
  return to_algebra(s);
}

std::string format_algebra(const VirtualNAlgebra& alg) { return format_structure(to_structure(alg)); }

Catalog parse_catalog(std::string_view text, const std::string& source) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string_view::npos)
    lines.pop_back();
  if (lines.empty()) throw ParseError(source, "1:1", "empty catalog");

  Json header = parse_json(lines[0], source, 1);
  Reader hr(source, "1:");
  hr.object(header, "");
  hr.only_keys(header, "", {"spec", "count"});
  Catalog c;
  c.spec = read_spec(hr.field(header, "", "spec"), hr);
  long count = hr.integer(hr.field(header, "", "count"), "/count");
  if (count != static_cast<long>(lines.size() - 1))
    hr.fail("/count", "header count " + std::to_string(count) + " but " +
                          std::to_string(lines.size() - 1) + " entries follow");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Json j = parse_json(lines[i], source, i + 1);
    c.entries.push_back(read_structure(j, Reader(source, std::to_string(i + 1) + ":")));
  }
  return c;
}

std::string format_catalog(const Catalog& c) {
  Json header;
  header["spec"] = spec_json(c.spec);
  header["count"] = c.count();
  std::string out = header.dump() + "\n";
  for (const auto& s : c.entries) out += format_structure_compact(s) + "\n";
  return out;
}

Diagram parse_diagram(std::string_view text, const std::string& source) {
  Json j = parse_json(text, source);
  Reader r(source);
  r.object(j, "");
  r.only_keys(j, "", {"name", "nodes", "edges"});
  std::string name = r.string(r.field(j, "", "name"), "/name");
  std::vector<Node> nodes;
  const Json& jn = r.array(r.field(j, "", "nodes"), "/nodes");
  for (std::size_t i = 0; i < jn.size(); ++i) {
    std::string p = idx("/nodes", i);
    r.object(jn[i], p);
    r.only_keys(jn[i], p, {"id", "kind", "rotation"});
    Node node;
    node.id = static_cast<int>(r.integer(r.field(jn[i], p, "id"), p + "/id"));
    auto kind = parse_node_kind(r.string(r.field(jn[i], p, "kind"), p + "/kind"));
    if (!kind) r.fail(p + "/kind", "unknown node kind");
    node.kind = *kind;
    const Json& rot = r.array(r.field(jn[i], p, "rotation"), p + "/rotation");
    for (std::size_t k = 0; k < rot.size(); ++k)
      node.rotation.push_back(static_cast<int>(r.integer(rot[k], idx(p + "/rotation", k))));
    nodes.push_back(std::move(node));
  }
  std::vector<Edge> edges;
  const Json& je = r.array(r.field(j, "", "edges"), "/edges");
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string p = idx("/edges", i);
    r.object(je[i], p);
    r.only_keys(je[i], p, {"id", "darts", "head"});
    Edge e;
    e.id = static_cast<int>(r.integer(r.field(je[i], p, "id"), p + "/id"));
    const Json& darts = r.array(r.field(je[i], p, "darts"), p + "/darts", 2);
    for (std::size_t k = 0; k < 2; ++k)
      e.darts[k] = static_cast<int>(r.integer(darts[k], idx(p + "/darts", k)));
    e.head = static_cast<int>(r.integer(r.field(je[i], p, "head"), p + "/head"));
    edges.push_back(e);
  }
  return Diagram(std::move(name), std::move(nodes), std::move(edges));
}

std::string format_diagram(const Diagram& d) {
  std::vector<std::string> nodes, edges;
  for (const Node& n : d.nodes()) {
    std::vector<std::string> rot;
    for (int dt : n.rotation) rot.push_back(std::to_string(dt));
    nodes.push_back("    {\"id\": " + std::to_string(n.id) + ", \"kind\": \"" +
                    std::string(to_string(n.kind)) + "\", \"rotation\": [" + join(rot, ", ") + "]}");
  }
  for (const Edge& e : d.edges())
    edges.push_back("    {\"id\": " + std::to_string(e.id) + ", \"darts\": [" +
                    std::to_string(e.darts[0]) + ", " + std::to_string(e.darts[1]) +
                    "], \"head\": " + std::to_string(e.head) + "}");
  auto block = [&](const std::vector<std::string>& items) {
    return items.empty() ? std::string("[]") : "[\n" + join(items, ",\n") + "\n  ]";
  };
  return "{\n  \"name\": " + Json(d.name()).dump() + ",\n  \"nodes\": " + block(nodes) +
         ",\n  \"edges\": " + block(edges) + "\n}\n";
}

std::string format_coloring(const Coloring& c) {
  std::vector<std::string> parts;
  for (const auto& [face, sym] : c) parts.push_back(std::to_string(face) + ":" + std::to_string(sym + 1));
  return join(parts, " ");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "0:0", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Structure load_structure(const std::filesystem::path& path) {
  return parse_structure(read_file(path), path.string());
}
VirtualNAlgebra load_algebra(const std::filesystem::path& path) {
  return parse_algebra(read_file(path), path.string());
}
Catalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(read_file(path), path.string());
}
Diagram load_diagram(const std::filesystem::path& path) {
  return parse_diagram(read_file(path), path.string());
}

}  // namespace vnalg::io
