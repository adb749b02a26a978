#ifndef PLEO_HEAD_TABLE_HPP
#define PLEO_HEAD_TABLE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pleo/tree.hpp"

namespace pleo {

// Head percolation rules, Collins style.  Each phrase label owns an ordered
// list of passes; the first pass that selects a child wins.
//
//   left / right        for each listed label in order, scan the children from
//                       that end and take the first child carrying the label
//   leftany / rightany  scan the children from that end and take the first
//                       child whose label is anywhere in the list
//
// A pass with an empty list takes the first (left) or last (right) child.
// Labels without a rule use the "*" rule; when no pass matches, the first
// child is the head, so every phrase has one.
class HeadTable {
 public:
  enum class Direction { Left, Right, LeftAny, RightAny };
  struct Pass {
    Direction direction = Direction::Left;
    std::vector<std::string> labels;
  };

  // Text format: one rule per line, "<label> <dir>:<l1>,<l2> [<dir>:...]",
  // '#' starts a comment.
  static HeadTable parse(std::string_view text);
  static HeadTable from_file(const std::string& path);
  // Table shipped in data/head_table.txt.
  static const HeadTable& builtin();

  std::size_t head_child(const ParseTree& phrase) const;
  bool has_rule(const std::string& label) const { return rules_.count(label) != 0; }
  const std::vector<Pass>& rule_for(const std::string& label) const;

 private:
  std::map<std::string, std::vector<Pass>> rules_;
  std::vector<Pass> default_rule_;
};

}  // namespace pleo

#endif
