#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgr/model.hpp"

namespace cgr {

struct ParseError {
  int line = 0;
  int column = 0;
  std::string rule;     // stable kebab-case id, e.g. "duplicate-id"
  std::string message;
};

std::string format_parse_error(const ParseError& error);

struct ParseResult {
  std::optional<KnowledgeBase> kb;
  std::vector<ParseError> errors;

  bool ok() const { return kb.has_value(); }
};

// Reads one .cgx version file. A successful result always passes validate().
ParseResult parse_kb(std::string_view bytes);

// Canonical form: elements in natural id order, arcs by (relation, position),
// 2-space indent, UTF-8, LF. Structurally equal kbs serialize byte-identically
// and parse_kb(serialize_kb(kb)) reproduces kb exactly.
std::string serialize_kb(const KnowledgeBase& kb);

struct ManifestResult {
  std::vector<std::string> paths;  // declared order = chronological order
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

// One version file path per line; blank lines and '#' comments are skipped.
// A manifest with no entries is an error.
ManifestResult load_manifest(std::string_view bytes);

}  // namespace cgr
