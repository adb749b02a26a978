#include "pleo/tree.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace pleo {

UnbalancedBrackets::UnbalancedBrackets(std::size_t position)
    : std::runtime_error("unbalanced brackets at offset " + std::to_string(position)),
      position_(position) {}

EmptySentence::EmptySentence(std::size_t line)
    : std::runtime_error("empty sentence at line " + std::to_string(line)) {}

std::string strip_function_tags(std::string_view label) {
  // -NONE-, -LRB-, -RRB- and friends are whole labels, not tags.
  if (label.empty() || label.front() == '-') return std::string(label);
  auto cut = label.find_first_of("-=");
  return std::string(label.substr(0, cut));
}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string atom() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

// Raw node before cleanup; a leaf is a node with a word.
struct RawNode {
  std::string label;
  std::optional<std::string> word;
  std::vector<RawNode> kids;
};

RawNode read_node(Lexer& lx) {
  // caller has verified '('
  ++lx.pos;
  RawNode node;
  if (lx.peek() != '(' && lx.peek() != ')') node.label = lx.atom();
  while (true) {
    if (lx.at_end()) throw UnbalancedBrackets(lx.pos);
    char c = lx.peek();
    if (c == ')') {
      ++lx.pos;
      break;
    }
    if (c == '(') {
      node.kids.push_back(read_node(lx));
    } else {
      std::string w = lx.atom();
      if (node.word || !node.kids.empty()) {
        // "(NP word word)" is not treebank notation; treat the words as leaves.
        RawNode leaf;
        leaf.label = "XX";
        leaf.word = std::move(w);
        node.kids.push_back(std::move(leaf));
      } else {
        node.word = std::move(w);
      }
    }
  }
  return node;
}

// Returns nullopt when the node vanishes (empty element or childless phrase).
std::optional<ParseTree> clean(const RawNode& raw, std::size_t& next_token) {
  ParseTree out;
  out.begin = next_token;
  if (raw.word) {
    if (raw.label == "-NONE-") return std::nullopt;
    out.label = strip_function_tags(raw.label);
    out.token = *raw.word;
    ++next_token;
    out.end = next_token;
    return out;
  }
  out.label = strip_function_tags(raw.label);
  for (const auto& k : raw.kids) {
    if (auto c = clean(k, next_token)) out.children.push_back(std::move(*c));
  }
  if (out.children.empty()) return std::nullopt;
  out.end = next_token;
  return out;
}

}  // namespace

std::vector<ParsedSentence> parse_bracketed_with_lines(std::string_view text) {
  std::vector<ParsedSentence> out;
  Lexer lx{text};
  while (!lx.at_end()) {
    if (lx.peek() == ')') throw UnbalancedBrackets(lx.pos);
    if (lx.peek() != '(') {
      // stray text between trees (e.g. a parser's failure marker)
      lx.atom();
      continue;
    }
    std::size_t line = lx.line;
    RawNode raw = read_node(lx);
    // "( (S ...) )" wrapper used by the WSJ .mrg files
    while (raw.label.empty() && !raw.word && raw.kids.size() == 1) {
      RawNode inner = std::move(raw.kids.front());
      raw = std::move(inner);
    }
    std::size_t next = 0;
    auto tree = clean(raw, next);
    if (!tree) throw EmptySentence(line);
    if (tree->label.empty()) tree->label = "ROOT";
    out.push_back({std::move(*tree), line});
  }
  return out;
}

std::vector<ParseTree> parse_bracketed(std::string_view text) {
  std::vector<ParseTree> out;
  for (auto& s : parse_bracketed_with_lines(text)) out.push_back(std::move(s.tree));
  return out;
}

std::vector<std::pair<std::string, std::string>> ParseTree::leaves() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(leaf_count());
  auto walk = [&](const ParseTree& t, auto& self) -> void {
    if (t.is_leaf()) {
      out.emplace_back(t.token, t.label);
      return;
    }
    for (const auto& c : t.children) self(c, self);
  };
  walk(*this, walk);
  return out;
}

std::string ParseTree::to_string() const {
  std::ostringstream os;
  auto walk = [&](const ParseTree& t, auto& self) -> void {
    os << '(' << t.label;
    if (t.is_leaf()) {
      os << ' ' << t.token;
    } else {
      for (const auto& c : t.children) {
        os << ' ';
        self(c, self);
      }
    }
    os << ')';
  };
  walk(*this, walk);
  return os.str();
}

}  // namespace pleo
