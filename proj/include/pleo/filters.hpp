#ifndef PLEO_FILTERS_HPP
#define PLEO_FILTERS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "pleo/lexicon.hpp"
#include "pleo/readings.hpp"

namespace pleo {

enum class MatrixKind { CopulaWithPredicate, GeneralVerb, ObjectOfVerb, ObjectOfPreposition };
std::string_view to_string(MatrixKind kind);

struct ExtrapositionCandidate {
  Reading reading;
  MatrixKind matrix_kind = MatrixKind::GeneralVerb;
  std::optional<std::size_t> predicate;  // head of the NP / ADJP / PP predicate or object
  ClauseInfo clause;
  bool s_flag = false;  // "it <verb> <infinitive>" with a non-copular verb
};

// Cleft cues, checked in this order; the first hit is reported.
enum class CleftCue {
  ProperNounOrPronoun = 1,
  BareCommonNoun,
  NumberDisagreement,
  DemonstrativePossessiveOrRelative,
  TheOfGrounded,
  Adverbial,
  ClausalConstituent,
  AwkwardRelative,
  PrepositionalWithFullClause,
  WhAdverbBeforeIt,
};
std::string_view to_string(CleftCue cue);
inline int cue_number(CleftCue cue) { return static_cast<int>(cue); }

struct FilterFlags {
  bool perfect_tense = true;
  bool multiple_vps = true;
  bool np_relative = true;
  bool modal_conditional = true;

  static FilterFlags all_off() { return {false, false, false, false}; }
  // Comma-separated list of optional filters to enable: perfect, multiple-vp,
  // np-relative, modal; or "all" / "none".  Throws std::invalid_argument.
  static FilterFlags parse(std::string_view list);
  std::string to_string() const;
};

struct FilterConfig {
  FilterFlags flags;
  WeatherTimeLexicon lexicon = WeatherTimeLexicon::builtin();
  WordSet cleft_exceptions = builtin_word_list("cleft_exceptions");
  SyntaxConfig syntax;
};

enum class RejectReason { None, Punctuation, PerfectTense, MultipleVPs, NpRelative, ModalConditional };
std::string_view to_string(RejectReason reason);

enum class VerdictKind { Cleft, WeatherTime, ExtrapositionCandidate, None };
std::string_view to_string(VerdictKind kind);

struct SyntacticVerdict {
  VerdictKind kind = VerdictKind::None;
  std::optional<ExtrapositionCandidate> candidate;
  std::optional<CleftCue> cleft_cue;
  // Set when a candidate was found but an additional filter removed it.
  RejectReason rejected = RejectReason::None;
};

bool detect_weather_time(const Reading& reading, const WeatherTimeLexicon& lex);
std::optional<CleftCue> filter_cleft(const Reading& reading, const FilterConfig& cfg);
std::optional<ExtrapositionCandidate> filter_extraposition(const Reading& reading,
                                                           const FilterConfig& cfg);

// Commas, dashes and colons strictly between "it" and the clause: 0 or >1.
bool punctuation_rule_holds(const DepTree& dep, std::size_t it, std::size_t clause_start);

// Returns RejectReason::None when the candidate survives.
RejectReason apply_additional_filters(const ExtrapositionCandidate& candidate, const FilterFlags& flags);

// weather/time, then cleft, then extraposition candidacy.
SyntacticVerdict syntactic_verdict(const Reading& reading, const FilterConfig& cfg);

}  // namespace pleo

#endif
