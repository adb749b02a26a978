#ifndef PLEO_TREE_HPP
#define PLEO_TREE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pleo {

// Constituency tree as read from Penn-Treebank style brackets.  Leaves carry
// the POS tag in `label` and the surface word in `token`.
struct ParseTree {
  std::string label;
  std::string token;
  std::vector<ParseTree> children;
  std::size_t begin = 0;  // first token index covered
  std::size_t end = 0;    // one past the last token index

  bool is_leaf() const { return children.empty(); }
  std::size_t leaf_count() const { return end - begin; }

  // Leaves in order, as (token, tag) pairs.
  std::vector<std::pair<std::string, std::string>> leaves() const;

  // Bracketed rendering, single line.
  std::string to_string() const;
};

struct ParsedSentence {
  ParseTree tree;
  std::size_t line = 0;  // 1-based line on which the tree starts
};

class UnbalancedBrackets : public std::runtime_error {
 public:
  explicit UnbalancedBrackets(std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EmptySentence : public std::runtime_error {
 public:
  explicit EmptySentence(std::size_t line);
};

// Reads every top-level tree in `text`.  Function tags (NP-SBJ-1 -> NP) and
// empty elements (-NONE-) are removed here, along with any phrase left
// without children, so gold trees and parser output look the same downstream.
std::vector<ParsedSentence> parse_bracketed_with_lines(std::string_view text);
std::vector<ParseTree> parse_bracketed(std::string_view text);

// Label with function tags and co-index suffixes removed.
std::string strip_function_tags(std::string_view label);

}  // namespace pleo

#endif
