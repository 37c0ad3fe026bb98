#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hyturan/detect.hpp"
#include "hyturan/extremal.hpp"
#include "hyturan/hypergraph.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan {

/// Malformed JSON or a document that does not describe a hypergraph.
/// Syntax errors carry 1-based line and column.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// {"n": int, "r": int, "edges": [[int, ...], ...]}; edge order is free.
Hypergraph hypergraph_from_json(std::string_view text);

nlohmann::ordered_json to_json(const Hypergraph& h);
nlohmann::ordered_json to_json(const SolverResult& res);
nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const SearchRecord& rec);
nlohmann::ordered_json to_json(const StabilityReport& rep);

/// Serializes with two-space indentation, floating point values printed
/// with 17 significant digits. Edge arrays are kept on one line.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace hyturan
