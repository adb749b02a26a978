#include "pleo/dependency.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleo {

bool DepNode::projects(const std::string& l) const {
  return std::find(projections.begin(), projections.end(), l) != projections.end();
}

DepTree::DepTree(std::vector<DepNode> nodes) : nodes_(std::move(nodes)), deps_(nodes_.size()) {
  for (const auto& n : nodes_) {
    if (n.head < 0)
      root_ = n.index;
    else
      deps_[static_cast<std::size_t>(n.head)].push_back(n.index);
  }
  for (auto& d : deps_) std::sort(d.begin(), d.end());
}

bool DepTree::dominates(std::size_t ancestor, std::size_t node) const {
  int cur = static_cast<int>(node);
  std::size_t steps = 0;
  while (cur >= 0 && steps++ <= nodes_.size()) {
    if (static_cast<std::size_t>(cur) == ancestor) return true;
    cur = nodes_[static_cast<std::size_t>(cur)].head;
  }
  return false;
}

void DepTree::validate() const {
  std::size_t roots = 0;
  for (const auto& n : nodes_) {
    if (n.head < 0) {
      ++roots;
      continue;
    }
    if (static_cast<std::size_t>(n.head) >= nodes_.size())
      throw std::logic_error("head index out of range");
    // walking up must reach the root within size() steps
    int cur = n.head;
    std::size_t steps = 0;
    while (cur >= 0) {
      if (++steps > nodes_.size()) throw std::logic_error("cycle in dependency tree");
      cur = nodes_[static_cast<std::size_t>(cur)].head;
    }
  }
  if (roots != 1) throw std::logic_error("dependency tree must have exactly one root");
}

namespace {

// Returns the lexical head (token index) of `t`.
std::size_t convert(const ParseTree& t, const HeadTable& table, std::vector<DepNode>& nodes) {
  if (t.is_leaf()) return t.begin;
  std::vector<std::size_t> heads;
  heads.reserve(t.children.size());
  for (const auto& c : t.children) heads.push_back(convert(c, table, nodes));
  const std::size_t h = table.head_child(t);
  const std::size_t lex = heads[h];
  for (std::size_t k = 0; k < heads.size(); ++k)
    if (k != h) nodes[heads[k]].head = static_cast<int>(lex);
  auto& n = nodes[lex];
  n.projections.push_back(t.label);
  n.span_begin = t.begin;
  n.span_end = t.end;
  return lex;
}

}  // namespace

DepTree to_dependency(const ParseTree& tree, const HeadTable& table) {
  std::vector<DepNode> nodes;
  auto leaves = tree.leaves();
  nodes.reserve(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    DepNode n;
    n.index = i;
    n.token = leaves[i].first;
    n.tag = leaves[i].second;
    n.span_begin = i;
    n.span_end = i + 1;
    nodes.push_back(std::move(n));
  }
  convert(tree, table, nodes);
  return DepTree(std::move(nodes));
}

}  // namespace pleo
