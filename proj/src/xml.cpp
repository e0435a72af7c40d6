#include "xml.hpp"

#include <cctype>

namespace cgr::xml {

const Attr* Node::attr(std::string_view name) const {
  for (const auto& a : attrs) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

namespace {

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool name_char(char c) {
  return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  Result run() {
    Result result;
    skip_prolog();
    skip_space_and_comments();
    if (eof()) {
      fail("expected a root element");
    } else {
      result.root = parse_element();
    }
    if (errors_.empty()) {
      skip_space_and_comments();
      if (!eof()) fail("content after the root element");
    }
    result.errors = std::move(errors_);
    return result;
  }

 private:
  std::string_view in_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Error> errors_;
  bool dead_ = false;  // stop consuming after the first syntax error

  bool eof() const { return pos_ >= in_.size() || dead_; }
  char peek() const { return in_[pos_]; }
  bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

  char advance() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void fail(std::string message, int line = 0, int col = 0) {
    errors_.push_back({line ? line : line_, line ? col : col_, std::move(message)});
    dead_ = true;
  }

  void skip_space() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
      advance();
  }

  void skip_prolog() {
    skip_space();
    if (!eof() && starts_with("<?xml")) {
      while (!eof() && !starts_with("?>")) advance();
      if (eof()) {
        fail("unterminated XML declaration");
        return;
      }
      advance();
      advance();
    }
  }

  void skip_space_and_comments() {
    for (;;) {
      skip_space();
      if (eof() || !starts_with("<!--")) return;
      int cl = line_, cc = col_;
      pos_ += 4;
      col_ += 4;
      while (!eof() && !starts_with("-->")) advance();
      if (eof()) {
        fail("unterminated comment", cl, cc);
        return;
      }
      pos_ += 3;
      col_ += 3;
    }
  }

  std::string parse_name() {
    if (eof() || !name_start(peek())) {
      fail("expected a name");
      return {};
    }
    std::string out;
    while (!eof() && name_char(peek())) out += advance();
    return out;
  }

  // Decodes one &...; entity; the leading '&' is already consumed.
  void parse_entity(std::string& out, int el, int ec) {
    std::string name;
    while (!eof() && peek() != ';' && name.size() < 8) name += advance();
    if (eof() || peek() != ';') {
      fail("malformed entity reference", el, ec);
      return;
    }
    advance();
    if (name == "amp") out += '&';
    else if (name == "lt") out += '<';
    else if (name == "gt") out += '>';
    else if (name == "quot") out += '"';
    else if (name == "apos") out += '\'';
    else fail("unknown entity &" + name + ";", el, ec);
  }

  std::string parse_attr_value() {
    if (eof() || (peek() != '"' && peek() != '\'')) {
      fail("expected a quoted attribute value");
      return {};
    }
    char quote = advance();
    std::string out;
    while (!eof() && peek() != quote) {
      char c = peek();
      if (c == '<') {
        fail("raw '<' in attribute value");
        return out;
      }
      if (static_cast<unsigned char>(c) < 0x20) {
        fail("control character in attribute value");
        return out;
      }
      if (c == '&') {
        int el = line_, ec = col_;
        advance();
        parse_entity(out, el, ec);
      } else {
        out += advance();
      }
    }
    if (eof()) {
      fail("unterminated attribute value");
      return out;
    }
    advance();
    return out;
  }

  Node parse_element() {
    Node node;
    node.line = line_;
    node.column = col_;
    if (eof() || peek() != '<') {
      fail("expected '<'");
      return node;
    }
    advance();
    node.name = parse_name();
    if (dead_) return node;

    for (;;) {
      skip_space();
      if (eof()) {
        fail("unterminated start tag of <" + node.name + ">", node.line, node.column);
        return node;
      }
      if (peek() == '/') {
        advance();
        if (eof() || peek() != '>') {
          fail("expected '>' after '/'");
          return node;
        }
        advance();
        return node;  // self-closing
      }
      if (peek() == '>') {
        advance();
        break;
      }
      Attr attr;
      attr.line = line_;
      attr.column = col_;
      attr.name = parse_name();
      if (dead_) return node;
      skip_space();
      if (eof() || peek() != '=') {
        fail("expected '=' after attribute name");
        return node;
      }
      advance();
      skip_space();
      attr.value = parse_attr_value();
      if (dead_) return node;
      if (node.attr(attr.name)) {
        fail("duplicate attribute '" + attr.name + "'", attr.line, attr.column);
        return node;
      }
      node.attrs.push_back(std::move(attr));
    }

    // Content until the matching close tag.
    for (;;) {
      if (eof()) {
        fail("missing close tag for <" + node.name + ">", node.line, node.column);
        return node;
      }
      if (starts_with("<!--")) {
        skip_space_and_comments();
        continue;
      }
      if (starts_with("</")) {
        int cl = line_, cc = col_;
        advance();
        advance();
        std::string close = parse_name();
        if (dead_) return node;
        skip_space();
        if (eof() || peek() != '>') {
          fail("expected '>' in close tag");
          return node;
        }
        advance();
        if (close != node.name)
          fail("close tag </" + close + "> does not match <" + node.name + ">", cl, cc);
        return node;
      }
      if (peek() == '<') {
        node.children.push_back(parse_element());
        if (dead_) return node;
        continue;
      }
      char c = peek();
      if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r') {
        fail("control character in content");
        return node;
      }
      if (c == '&') {
        int el = line_, ec = col_;
        advance();
        parse_entity(node.text, el, ec);
        if (dead_) return node;
      } else {
        node.text += advance();
      }
    }
  }
};

}  // namespace

Result parse(std::string_view input) { return Parser(input).run(); }

std::string escape_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attr(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace cgr::xml
