#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vnalg/coloring.hpp"
#include "vnalg/diagram.hpp"
#include "vnalg/enumeration.hpp"

namespace vnalg::io {

// Algebra files: {"n", "horizontal", "vertical", "product"} with 1-based
// symbols and null for an undefined product cell. Any of the three tables
// may be absent.

/// Throws ParseError with "line:col" for syntax errors and a JSON pointer
/// for field errors.
Structure parse_structure(std::string_view text, const std::string& source = "<input>");
/// Multi-line layout, one matrix row per line.
std::string format_structure(const Structure& s);
/// Single-line layout used in catalogs.
std::string format_structure_compact(const Structure& s);

/// Requires all three tables.
VirtualNAlgebra parse_algebra(std::string_view text, const std::string& source = "<input>");
std::string format_algebra(const VirtualNAlgebra& alg);

// Catalog files: a header line {"spec": {...}, "count": N} followed by one
// compact structure per line.
Catalog parse_catalog(std::string_view text, const std::string& source = "<input>");
std::string format_catalog(const Catalog& c);

// Diagram files: {"name", "nodes": [{"id", "kind", "rotation"}],
// "edges": [{"id", "darts", "head"}]}, arrays sorted by id.
Diagram parse_diagram(std::string_view text, const std::string& source = "<input>");
std::string format_diagram(const Diagram& d);

/// "face:symbol" pairs separated by spaces, symbols 1-based.
std::string format_coloring(const Coloring& c);

/// Reads a whole file. Throws ParseError (where "0:0") if it cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

Structure load_structure(const std::filesystem::path& path);
VirtualNAlgebra load_algebra(const std::filesystem::path& path);
Catalog load_catalog(const std::filesystem::path& path);
Diagram load_diagram(const std::filesystem::path& path);

}  // namespace vnalg::io
