#pragma once

#include <stdexcept>
#include <string>

namespace vnalg {

/// Raised when a structure is internally inconsistent (e.g. a product row
/// holding the same symbol twice was passed where a partial Latin square is
/// required).
class CorruptStructure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a search or oracle is requested outside its resource guard.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `where` is "line:col" for syntax errors or a JSON
/// pointer for field errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::string where, const std::string& what)
      : std::runtime_error(source + ":" + where + ": " + what),
        source_(std::move(source)), where_(std::move(where)) {}

  const std::string& source() const { return source_; }
  const std::string& where() const { return where_; }

 private:
  std::string source_;
  std::string where_;
};

class DiagramError : public std::runtime_error {
 public:
  enum class Code { InconsistentMap, LegNode, ForbiddenMove, UnknownMove, InvalidDiagram };

  DiagramError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace vnalg
