#ifndef PLEO_QUERYGEN_HPP
#define PLEO_QUERYGEN_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pleo/corpus.hpp"
#include "pleo/filters.hpp"
#include "pleo/query.hpp"

namespace pleo {

// Named word lists for query stubs.  See data/stubs.txt.
class StubSet {
 public:
  static StubSet parse(std::string_view text);
  static StubSet from_file(const std::string& path);
  static const StubSet& builtin();

  // Throws std::out_of_range for an unknown list.
  const std::vector<std::string>& list(const std::string& name) const;
  // The whole list, or only its first word when `simple`.
  Slot slot(const std::string& name, bool simple = false) const;

 private:
  std::map<std::string, std::vector<std::string>> lists_;
};

class UnsupportedClauseForm : public std::invalid_argument {
 public:
  explicit UnsupportedClauseForm(ClauseForm f);
};

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoMatrixVerb : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct QueryOptions {
  // Engines without alternation: verbs in 3sg-present only, stubs in their
  // simplest form.  Remaining alternations are left to the corpus layer.
  bool simple_forms = false;
};

struct SimplifiedClause {
  std::vector<Slot> head;           // "to read", "that", "whether", ...
  std::optional<Slot> stub;         // absent when the clause has no nominal object
  std::vector<Slot> slots() const;  // head followed by the stub
};

SimplifiedClause simplify_clause(const DepTree& dep, const ClauseInfo& clause, const StubSet& stubs,
                                 const QueryOptions& opt = {});

// `modifiers` are not/too tokens kept in front of an adjectival head.
std::vector<Slot> truncate_object(const DepTree& dep, std::optional<std::size_t> phrase,
                                  const std::vector<std::size_t>& modifiers, const StubSet& stubs,
                                  const QueryOptions& opt = {});

// 3sg-present and simple past, with particles after the verb; "be" gives is|was|'s.
std::vector<Slot> expand_verb(const DepTree& dep, std::size_t verb, const QueryOptions& opt = {});
Slot expand_lemma(const std::string& lemma, const QueryOptions& opt = {});

struct QueryBundle {
  ExtrapositionCandidate candidate;
  std::vector<Query> queries;

  const Query* find(QueryPurpose p) const;
  bool has_stepped_down() const { return find(QueryPurpose::PatternIIp_it) != nullptr; }
};

QueryBundle build_bundle(const ExtrapositionCandidate& candidate, const StubSet& stubs,
                         const BackendCapabilities& caps, bool pattern3 = false);

// Throws NotApplicable unless the predicate is adjectival and the
// infinitive verb has no object.
std::vector<Query> build_pattern3(const ExtrapositionCandidate& candidate, const QueryOptions& opt = {});

}  // namespace pleo

#endif
