#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "peirce/ring.hpp"

namespace peirce {

/// Malformed input. `where` is "line L, column C" for syntax errors and a
/// JSON pointer such as "/table/2/0/1" for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses text, mapping syntax errors to a line/column ParseError.
nlohmann::json parse_json(std::string_view text);
std::string read_file(const std::filesystem::path& path);

/// Ring file: {"name", "modulus", "basis", "table"} with table[i][j] the
/// coefficients of basis_i * basis_j, already reduced into [0, modulus).
Ring ring_from_json(const nlohmann::json& j, const std::string& pointer = "");
nlohmann::ordered_json ring_to_json(const Ring& ring);

Ring load_ring(std::string_view text);
Ring load_ring_file(const std::filesystem::path& path);

/// Canonical text of a ring file: one table row per line, trailing newline.
std::string write_ring(const Ring& ring);

/// A label sum such as "e+a11", "2*b12+c21", "-e11" or "0", or a decimal
/// element_index.
Element parse_element(const Ring& ring, std::string_view text);

}  // namespace peirce
