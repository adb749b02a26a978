#ifndef PLEO_READINGS_HPP
#define PLEO_READINGS_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pleo/dependency.hpp"

namespace pleo {

using DepTreePtr = std::shared_ptr<const DepTree>;

enum class GrammaticalRole { Subject, VerbObject, PrepositionObject };
std::string_view to_string(GrammaticalRole role);

struct ItInstance {
  std::string sentence_id;
  std::size_t token_index = 0;
  GrammaticalRole role = GrammaticalRole::Subject;
};

// Shapes of a subordinate clause.  The first five are the extraposable ones.
enum class ClauseForm {
  Infinitive,
  ForInfinitive,
  Gerund,
  FullWithComplementizer,
  FullBare,
  Relative,
  Other
};
std::string_view to_string(ClauseForm form);

struct ClauseInfo {
  std::size_t head = 0;  // clause verb
  ClauseForm form = ClauseForm::Other;
  bool finite = false;
  bool passive = false;                          // be-auxiliary + VBN head
  std::optional<std::size_t> complementizer;     // that / whether / if / wh-word / for
  std::optional<std::size_t> infinitive_marker;  // "to"
  std::optional<std::size_t> subject;
  std::optional<std::size_t> object;           // first nominal complement of the verb
  std::optional<std::size_t> embedded_clause;  // that/wh clause under an infinitive
  std::vector<std::size_t> particles;
  std::size_t first_token = 0;  // leftmost token of the clause
};

// One matrix-verb decomposition of a sentence around an "it".
struct Reading {
  DepTreePtr tree;
  ItInstance it;
  std::size_t matrix_verb = 0;
  // Object-complement construction: the matrix verb of the reading is a
  // synthetic copula (tag VBX) between "it" and `matrix_object`; the
  // `matrix_verb` index then points at the verb governing the small clause.
  bool virtual_copula = false;
  std::optional<std::size_t> matrix_object;  // logical predicate / object head
  std::optional<std::size_t> preposition;    // "see to it that"
  std::optional<std::size_t> subordinate_clause;
  std::optional<std::size_t> complementizer;
  std::vector<std::size_t> modifiers;  // not / too kept with the predicate
  bool parenthetical = false;          // "Americans it seems have followed"

  const DepTree& dep() const { return *tree; }
  std::string matrix_verb_tag() const;
  std::string matrix_verb_form() const;  // surface form, "be" when virtual
  bool copular() const;                  // main copula "to be", real or virtual
};

class NoGoverningVerb : public std::runtime_error {
 public:
  explicit NoGoverningVerb(std::size_t token_index);
};

struct SyntaxConfig {
  // wh-adverbs that may introduce an extraposed clause
  std::set<std::string> wh_adverbs{"how", "why", "when", "where", "whether"};
};

// ---- word-level helpers shared by the filters and query generation ----
bool is_verb_tag(std::string_view tag);
bool is_noun_tag(std::string_view tag);
bool is_punctuation(const DepNode& n);
bool is_clause_label(std::string_view label);
// Outermost non-clausal projection; the small-clause S over a predicate is skipped.
const std::string& predicate_label(const DepNode& n);
std::string lower(const DepNode& n);
// Verb or verb-headed phrase; a word heading a VP counts even when mis-tagged.
bool is_verbal(const DepNode& n);
bool is_copula(const DepNode& n);
bool is_auxiliary_of(const DepTree& dep, std::size_t aux, std::size_t verb);

std::vector<ItInstance> find_it_instances(const DepTree& dep, const std::string& sentence_id = {});

ClauseInfo analyze_clause(const DepTree& dep, std::size_t head, const SyntaxConfig& cfg = {});

// Walks the verb chain below the governing verb, outermost verb first.
// Throws NoGoverningVerb when no verb dominates the pronoun.
std::vector<Reading> generate_readings(const ItInstance& instance, const DepTreePtr& dep,
                                       const SyntaxConfig& cfg = {});

}  // namespace pleo

#endif
