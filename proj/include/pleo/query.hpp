#ifndef PLEO_QUERY_HPP
#define PLEO_QUERY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pleo {

enum class QueryPurpose {
  PatternI,
  PatternII_it,
  PatternII_others,
  PatternIIp_it,
  PatternIIp_others,
  ObjectIt,
  ObjectThem,
  P3_compound,
  P3_gerund_prep,
  P3_gerund_det,
};
std::string_view to_string(QueryPurpose p);

// One position of a quoted phrase query: a literal word or an alternation.
struct Slot {
  std::vector<std::string> words;

  Slot() = default;
  Slot(std::string word);  // NOLINT: literal slots read naturally as strings
  Slot(std::vector<std::string> alternatives);
  Slot(std::initializer_list<std::string> alternatives)
      : Slot(std::vector<std::string>(alternatives)) {}

  bool is_alternation() const { return words.size() > 1; }
  bool operator==(const Slot&) const = default;
};

class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Query {
  std::vector<Slot> slots;
  QueryPurpose purpose = QueryPurpose::PatternI;
  bool quoted = true;

  // Lowercase, single spaces, alternatives joined by '|'.
  std::string serialize() const;
  // Throws InvalidQuery on empty slots or fewer than two positions.
  static Query parse(std::string_view text, QueryPurpose purpose = QueryPurpose::PatternI);

  // Throws InvalidQuery when an invariant is broken.
  void validate() const;

  // Every combination of single words, in slot order.
  std::vector<Query> explode() const;

  bool operator==(const Query& o) const { return slots == o.slots && purpose == o.purpose; }
};

}  // namespace pleo

#endif
