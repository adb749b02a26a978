#ifndef PLEO_DEPENDENCY_HPP
#define PLEO_DEPENDENCY_HPP

#include <string>
#include <vector>

#include "pleo/head_table.hpp"
#include "pleo/tree.hpp"

namespace pleo {

struct DepNode {
  std::size_t index = 0;
  std::string token;
  std::string tag;
  int head = -1;  // -1 for the root
  // Phrase labels this word heads, innermost first.  The last entry is the
  // maximal projection, i.e. the constituent that attaches to `head`.
  std::vector<std::string> projections;
  std::size_t span_begin = 0;  // token span of the maximal projection
  std::size_t span_end = 0;

  const std::string& label() const { return projections.empty() ? tag : projections.back(); }
  bool projects(const std::string& l) const;
};

class DepTree {
 public:
  DepTree() = default;
  explicit DepTree(std::vector<DepNode> nodes);

  std::size_t size() const { return nodes_.size(); }
  const DepNode& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<DepNode>& nodes() const { return nodes_; }
  std::size_t root() const { return root_; }

  // Dependents of `i` in surface order.
  const std::vector<std::size_t>& dependents(std::size_t i) const { return deps_[i]; }
  bool dominates(std::size_t ancestor, std::size_t node) const;

  // Throws std::logic_error when the tree breaks an invariant.
  void validate() const;

 private:
  std::vector<DepNode> nodes_;
  std::vector<std::vector<std::size_t>> deps_;
  std::size_t root_ = 0;
};

// Every non-head child attaches to the lexical head of its parent phrase.
DepTree to_dependency(const ParseTree& tree, const HeadTable& table = HeadTable::builtin());

}  // namespace pleo

#endif
