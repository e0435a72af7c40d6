#pragma once

#include <string>
#include <string_view>
#include <vector>

// Reader for the small XML subset used by the .cgx and criteria formats:
// one root element, attributes, nesting, character data, comments, and the
// five named entities. No DTDs, processing instructions (beyond an optional
// leading declaration), CDATA, or numeric character references. Every
// diagnostic carries a 1-based line/column.

namespace cgr::xml {

struct Attr {
  std::string name;
  std::string value;
  int line = 0;
  int column = 0;
};

struct Node {
  std::string name;
  std::vector<Attr> attrs;
  std::vector<Node> children;
  std::string text;  // concatenated character data, entities decoded
  int line = 0;
  int column = 0;

  const Attr* attr(std::string_view name) const;
};

struct Error {
  int line = 0;
  int column = 0;
  std::string message;
};

struct Result {
  Node root;
  std::vector<Error> errors;
  bool ok() const { return errors.empty(); }
};

Result parse(std::string_view input);

// Escapes &, <, > and (in attribute position) double quotes.
std::string escape_text(std::string_view raw);
std::string escape_attr(std::string_view raw);

}  // namespace cgr::xml
