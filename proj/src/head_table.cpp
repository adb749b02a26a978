#include "pleo/head_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleo/data.hpp"

namespace pleo {

namespace {

HeadTable::Direction parse_direction(const std::string& d) {
  if (d == "left") return HeadTable::Direction::Left;
  if (d == "right") return HeadTable::Direction::Right;
  if (d == "leftany") return HeadTable::Direction::LeftAny;
  if (d == "rightany") return HeadTable::Direction::RightAny;
  throw std::runtime_error("head table: unknown direction '" + d + "'");
}

}  // namespace

HeadTable HeadTable::parse(std::string_view text) {
  HeadTable t;
  t.default_rule_ = {Pass{Direction::Left, {}}};
  for (const auto& line : data_lines(text)) {
    auto fields = split_ws(line);
    std::vector<Pass> passes;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto colon = fields[i].find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("head table: malformed pass '" + fields[i] + "'");
      Pass p;
      p.direction = parse_direction(fields[i].substr(0, colon));
      std::string list = fields[i].substr(colon + 1);
      if (!list.empty()) p.labels = split(list, ',');
      passes.push_back(std::move(p));
    }
    if (passes.empty()) throw std::runtime_error("head table: rule without passes: " + line);
    if (fields[0] == "*")
      t.default_rule_ = std::move(passes);
    else
      t.rules_[fields[0]] = std::move(passes);
  }
  return t;
}

HeadTable HeadTable::from_file(const std::string& path) { return parse(read_file(path)); }

const HeadTable& HeadTable::builtin() {
  static const HeadTable table = parse(embedded_data("head_table.txt"));
  return table;
}

const std::vector<HeadTable::Pass>& HeadTable::rule_for(const std::string& label) const {
  auto it = rules_.find(label);
  return it == rules_.end() ? default_rule_ : it->second;
}

std::size_t HeadTable::head_child(const ParseTree& phrase) const {
  const auto& kids = phrase.children;
  const std::size_t n = kids.size();
  if (n <= 1) return 0;
  for (const auto& pass : rule_for(phrase.label)) {
    const bool from_left = pass.direction == Direction::Left || pass.direction == Direction::LeftAny;
    if (pass.labels.empty()) return from_left ? 0 : n - 1;
    auto at = [&](std::size_t k) { return from_left ? k : n - 1 - k; };
    if (pass.direction == Direction::Left || pass.direction == Direction::Right) {
      for (const auto& want : pass.labels)
        for (std::size_t k = 0; k < n; ++k)
          if (kids[at(k)].label == want) return at(k);
    } else {
      for (std::size_t k = 0; k < n; ++k)
        if (std::find(pass.labels.begin(), pass.labels.end(), kids[at(k)].label) !=
            pass.labels.end())
          return at(k);
    }
  }
  return 0;
}

}  // namespace pleo
