#include "pleo/filters.hpp"

#include <stdexcept>

#include "pleo/data.hpp"
#include "pleo/morphology.hpp"

namespace pleo {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::CopulaWithPredicate: return "copula-with-predicate";
    case MatrixKind::GeneralVerb: return "general-verb";
    case MatrixKind::ObjectOfVerb: return "object-of-verb";
    case MatrixKind::ObjectOfPreposition: return "object-of-preposition";
  }
  return "?";
}

std::string_view to_string(CleftCue cue) {
  switch (cue) {
    case CleftCue::ProperNounOrPronoun: return "proper-noun-or-pronoun";
    case CleftCue::BareCommonNoun: return "bare-common-noun";
    case CleftCue::NumberDisagreement: return "number-disagreement";
    case CleftCue::DemonstrativePossessiveOrRelative: return "demonstrative-possessive-or-relative";
    case CleftCue::TheOfGrounded: return "the-of-grounded";
    case CleftCue::Adverbial: return "adverbial";
    case CleftCue::ClausalConstituent: return "clausal-constituent";
    case CleftCue::AwkwardRelative: return "awkward-relative";
    case CleftCue::PrepositionalWithFullClause: return "prepositional-with-full-clause";
    case CleftCue::WhAdverbBeforeIt: return "wh-adverb-before-it";
  }
  return "?";
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::None: return "none";
    case RejectReason::Punctuation: return "punctuation";
    case RejectReason::PerfectTense: return "perfect-tense";
    case RejectReason::MultipleVPs: return "multiple-vp";
    case RejectReason::NpRelative: return "np-relative";
    case RejectReason::ModalConditional: return "modal";
  }
  return "?";
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Cleft: return "cleft";
    case VerdictKind::WeatherTime: return "weather_time";
    case VerdictKind::ExtrapositionCandidate: return "extraposition_candidate";
    case VerdictKind::None: return "none";
  }
  return "?";
}

FilterFlags FilterFlags::parse(std::string_view list) {
  FilterFlags f = all_off();
  for (const auto& raw : split(list, ',')) {
    const std::string name = to_lower(trim(raw));
    if (name.empty() || name == "none") continue;
    if (name == "all")
      f = FilterFlags{};
    else if (name == "perfect")
      f.perfect_tense = true;
    else if (name == "multiple-vp")
      f.multiple_vps = true;
    else if (name == "np-relative")
      f.np_relative = true;
    else if (name == "modal")
      f.modal_conditional = true;
    else
      throw std::invalid_argument("unknown filter '" + name +
                                  "' (expected perfect, multiple-vp, np-relative, modal, all, none)");
  }
  return f;
}

std::string FilterFlags::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(perfect_tense, "perfect");
  add(multiple_vps, "multiple-vp");
  add(np_relative, "np-relative");
  add(modal_conditional, "modal");
  return out.empty() ? "none" : out;
}

namespace {

const Morphology& morph() { return Morphology::builtin(); }

std::string head_lemma(const DepNode& n) {
  if (is_noun_tag(n.tag)) return morph().noun_lemma(n.token, n.tag);
  return lower(n);
}

bool is_adjectival(const std::string& label) {
  return label == "ADJP" || label == "WHADJP" || label == "JJ" || label == "JJR" || label == "JJS";
}

bool is_predicate_label(const std::string& label) {
  return label == "NP" || label == "PP" || label == "NX" || label == "QP" || label == "PRP" ||
         is_noun_tag(label) || is_adjectival(label);
}

bool extraposable(ClauseForm f) {
  return f == ClauseForm::Infinitive || f == ClauseForm::ForInfinitive || f == ClauseForm::Gerund ||
         f == ClauseForm::FullWithComplementizer || f == ClauseForm::FullBare;
}

bool has_determiner(const DepTree& dep, std::size_t np) {
  for (std::size_t d : dep.dependents(np)) {
    if (d > np) break;
    const auto& n = dep[d];
    if (n.tag == "DT" || n.tag == "PDT" || n.tag == "PRP$" || n.tag == "WP$" || n.tag == "CD") return true;
    for (std::size_t e : dep.dependents(d))
      if (dep[e].tag == "POS") return true;
  }
  return false;
}

bool has_determiner_word(const DepTree& dep, std::size_t np, std::initializer_list<std::string_view> words) {
  for (std::size_t d : dep.dependents(np)) {
    if (d > np) break;
    if (dep[d].tag != "DT") continue;
    const std::string w = lower(dep[d]);
    for (auto x : words)
      if (w == x) return true;
  }
  return false;
}

bool is_possessed(const DepTree& dep, std::size_t np) {
  for (std::size_t d : dep.dependents(np)) {
    if (d > np) break;
    if (dep[d].tag == "PRP$" || dep[d].tag == "WP$") return true;
    for (std::size_t e : dep.dependents(d))
      if (dep[e].tag == "POS") return true;
  }
  return false;
}

bool cleft_shaped(const DepTree& dep, const ClauseInfo& ci) {
  if (!ci.finite) return false;
  if (ci.form == ClauseForm::Relative || ci.form == ClauseForm::FullBare) return true;
  if (ci.form == ClauseForm::FullWithComplementizer && ci.complementizer) {
    const std::string w = lower(dep[*ci.complementizer]);
    return w == "that" || w == "when" || w == "where";
  }
  return false;
}

// Dependents of the clause verb beyond subject, complementizer, auxiliaries,
// negation and punctuation.
std::vector<std::size_t> clause_elements(const DepTree& dep, const ClauseInfo& ci) {
  std::vector<std::size_t> out;
  for (std::size_t d : dep.dependents(ci.head)) {
    const auto& n = dep[d];
    if (is_punctuation(n)) continue;
    if (ci.complementizer && d == *ci.complementizer) continue;
    if (ci.subject && d == *ci.subject) continue;
    if (is_auxiliary_of(dep, d, ci.head)) continue;
    const std::string w = lower(n);
    if (w == "not" || w == "n't") continue;
    out.push_back(d);
  }
  return out;
}

bool awkward_relative(const DepTree& dep, const ClauseInfo& ci) {
  const auto elements = clause_elements(dep, ci);
  if (elements.empty()) return true;
  return elements.size() == 1 && is_copula(dep[ci.head]) && is_adjectival(dep[elements[0]].label());
}

std::optional<CleftCue> nominal_cues(const DepTree& dep, std::size_t c, std::size_t copula,
                                     std::size_t cleft_clause, const FilterConfig& cfg) {
  const auto& C = dep[c];
  if (C.tag == "NNP" || C.tag == "NNPS" || C.tag == "PRP") return CleftCue::ProperNounOrPronoun;
  if ((C.tag == "NN" || C.tag == "NNS") && !has_determiner(dep, c)) return CleftCue::BareCommonNoun;
  const std::string cop = lower(dep[copula]);
  if ((C.tag == "NNS" || C.tag == "NNPS") && (cop == "is" || cop == "was" || cop == "'s"))
    return CleftCue::NumberDisagreement;
  if (has_determiner_word(dep, c, {"this", "that", "these", "those"}) || is_possessed(dep, c))
    return CleftCue::DemonstrativePossessiveOrRelative;
  for (std::size_t d : dep.dependents(c))
    if (d > c && d != cleft_clause && is_clause_label(dep[d].label()) && is_verbal(dep[d]))
      return CleftCue::DemonstrativePossessiveOrRelative;
  if (has_determiner_word(dep, c, {"the"}) && !cfg.cleft_exceptions.count(head_lemma(C))) {
    for (std::size_t d : dep.dependents(c)) {
      if (d < c || dep[d].label() != "PP" || lower(dep[d]) != "of") continue;
      for (std::size_t o : dep.dependents(d)) {
        if (o < d) continue;
        const auto& O = dep[o];
        if (O.tag == "NNS" || O.tag == "NNPS" || has_determiner_word(dep, o, {"the"}))
          return CleftCue::TheOfGrounded;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool detect_weather_time(const Reading& reading, const WeatherTimeLexicon& lex) {
  if (reading.it.role != GrammaticalRole::Subject) return false;
  const DepTree& dep = reading.dep();
  const auto& v = dep[reading.matrix_verb];
  if (!reading.copular()) {
    if (reading.virtual_copula || v.tag.substr(0, 2) != "VB") return false;
    return lex.weather_verbs.count(morph().verb_lemma(v.token, v.tag)) > 0;
  }
  if (!reading.matrix_object) return false;
  const std::string lemma = head_lemma(dep[*reading.matrix_object]);
  return lex.weather_heads.count(lemma) > 0 || lex.time_heads.count(lemma) > 0;
}

bool punctuation_rule_holds(const DepTree& dep, std::size_t it, std::size_t clause_start) {
  std::size_t marks = 0;
  for (std::size_t i = it + 1; i < clause_start && i < dep.size(); ++i) {
    const auto& t = dep[i].token;
    if (t == "," || t == "-" || t == "--" || t == ":") ++marks;
  }
  return marks != 1;
}

std::optional<CleftCue> filter_cleft(const Reading& reading, const FilterConfig& cfg) {
  if (reading.it.role != GrammaticalRole::Subject || reading.virtual_copula) return std::nullopt;
  const DepTree& dep = reading.dep();
  const std::size_t v = reading.matrix_verb;
  const std::size_t it = reading.it.token_index;
  if (!is_copula(dep[v])) return std::nullopt;

  std::optional<std::size_t> constituent = reading.matrix_object;
  if (constituent && is_adjectival(dep[*constituent].label())) return std::nullopt;

  const std::size_t after = constituent ? dep[*constituent].span_end - 1 : std::max(v, it);
  std::vector<std::size_t> clauses;
  for (std::size_t d : dep.dependents(v))
    if (d > after && d > it && is_clause_label(dep[d].label()) && is_verbal(dep[d])) clauses.push_back(d);

  std::optional<std::size_t> cleft_clause;
  std::size_t first_candidate = 0;
  if (!constituent && clauses.size() >= 2) {
    constituent = clauses[0];
    first_candidate = 1;
  }
  for (std::size_t k = first_candidate; k < clauses.size(); ++k) {
    if (cleft_shaped(dep, analyze_clause(dep, clauses[k], cfg.syntax))) {
      cleft_clause = clauses[k];
      break;
    }
  }
  if (!cleft_clause && constituent && reading.subordinate_clause &&
      dep.dominates(*constituent, *reading.subordinate_clause) &&
      cleft_shaped(dep, analyze_clause(dep, *reading.subordinate_clause, cfg.syntax)))
    cleft_clause = reading.subordinate_clause;
  if (!cleft_clause) return std::nullopt;

  const ClauseInfo ci = analyze_clause(dep, *cleft_clause, cfg.syntax);
  if (!punctuation_rule_holds(dep, it, ci.first_token)) return std::nullopt;

  if (constituent) {
    const std::size_t c = *constituent;
    const auto& C = dep[c];
    const auto& label = C.label();
    if (label == "NP" || label == "NX" || is_noun_tag(label) || label == "PRP") {
      if (auto cue = nominal_cues(dep, c, v, *cleft_clause, cfg)) return cue;
    }
    if (cfg.syntax.wh_adverbs.count(lower(C)) == 0 && is_clause_label(label)) {
      const ClauseInfo cc = analyze_clause(dep, c, cfg.syntax);
      if (cc.complementizer && lower(dep[*cc.complementizer]) == "when") return CleftCue::Adverbial;
    }
    static const WordSet adverbs = {"here", "there", "today", "yesterday", "tomorrow", "now", "then", "tonight"};
    if (adverbs.count(lower(C))) return CleftCue::Adverbial;
    if (is_clause_label(label) || C.tag == "VBG") return CleftCue::ClausalConstituent;
    if (awkward_relative(dep, ci)) return CleftCue::AwkwardRelative;
    if (label == "PP" && (ci.form == ClauseForm::FullWithComplementizer || ci.form == ClauseForm::FullBare))
      return CleftCue::PrepositionalWithFullClause;
  }
  if (it > 0 && (dep[it - 1].tag == "WRB" || dep[it - 1].label() == "WHADVP"))
    return CleftCue::WhAdverbBeforeIt;
  return std::nullopt;
}

std::optional<ExtrapositionCandidate> filter_extraposition(const Reading& reading, const FilterConfig& cfg) {
  if (!reading.subordinate_clause) return std::nullopt;
  const DepTree& dep = reading.dep();
  const std::size_t it = reading.it.token_index;
  ExtrapositionCandidate cand;
  cand.reading = reading;
  cand.clause = analyze_clause(dep, *reading.subordinate_clause, cfg.syntax);
  cand.predicate = reading.matrix_object;

  if (reading.parenthetical) {
    if (!cand.clause.finite) return std::nullopt;
    cand.clause.form = ClauseForm::FullBare;
    cand.matrix_kind = reading.copular() ? MatrixKind::CopulaWithPredicate : MatrixKind::GeneralVerb;
    return cand;
  }
  // relatives after an NP predicate reach the additional filters, which may reject them
  const bool np_relative = cand.clause.form == ClauseForm::Relative && reading.copular() && reading.matrix_object &&
                           predicate_label(dep[*reading.matrix_object]) == "NP";
  if ((!extraposable(cand.clause.form) && !np_relative) || *reading.subordinate_clause < it) return std::nullopt;

  const bool subject_like = reading.it.role == GrammaticalRole::Subject || reading.virtual_copula;
  if (subject_like) {
    if (reading.copular()) {
      if (!reading.matrix_object || !is_predicate_label(predicate_label(dep[*reading.matrix_object])))
        return std::nullopt;
      cand.matrix_kind = MatrixKind::CopulaWithPredicate;
    } else {
      cand.matrix_kind = MatrixKind::GeneralVerb;
    }
    cand.s_flag = !reading.copular() && cand.clause.form == ClauseForm::Infinitive;
    return cand;
  }

  if (cand.clause.form != ClauseForm::FullWithComplementizer || !cand.clause.complementizer ||
      lower(dep[*cand.clause.complementizer]) != "that")
    return std::nullopt;
  cand.matrix_kind = reading.it.role == GrammaticalRole::PrepositionObject ? MatrixKind::ObjectOfPreposition
                                                                          : MatrixKind::ObjectOfVerb;
  cand.predicate.reset();
  return cand;
}

RejectReason apply_additional_filters(const ExtrapositionCandidate& cand, const FilterFlags& flags) {
  const Reading& r = cand.reading;
  const DepTree& dep = r.dep();
  const std::size_t v = r.matrix_verb;
  if (!punctuation_rule_holds(dep, r.it.token_index, cand.clause.first_token)) return RejectReason::Punctuation;

  if (flags.perfect_tense && !r.copular() && dep[v].tag == "VBN") {
    for (std::size_t d : dep.dependents(v))
      if (d < v && is_auxiliary_of(dep, d, v) && is_have_form(lower(dep[d])))
        return RejectReason::PerfectTense;
  }
  if (flags.multiple_vps && !r.virtual_copula) {
    bool coordinator = false, conjunct = false;
    for (std::size_t d : dep.dependents(v)) {
      if (d < v) continue;
      if (dep[d].tag == "CC") coordinator = true;
      if (coordinator && dep[d].label() == "VP" && is_verbal(dep[d])) conjunct = true;
    }
    if (conjunct) return RejectReason::MultipleVPs;
  }
  if (flags.np_relative && cand.matrix_kind == MatrixKind::CopulaWithPredicate && cand.predicate &&
      predicate_label(dep[*cand.predicate]) == "NP" && cand.clause.form == ClauseForm::Relative)
    return RejectReason::NpRelative;
  if (flags.modal_conditional && !r.virtual_copula && cand.clause.complementizer) {
    const auto& comp = dep[*cand.clause.complementizer];
    const std::string cw = lower(comp);
    const bool conditional = cw == "if" || cw == "whether" || comp.tag == "WRB" || comp.label() == "WHADVP";
    bool modal = false;
    for (std::size_t d : dep.dependents(v)) {
      if (d > v || dep[d].tag != "MD") continue;
      const std::string m = lower(dep[d]);
      if (m == "could" || m == "would" || m == "'d") modal = true;
    }
    if (conditional && modal) return RejectReason::ModalConditional;
  }
  return RejectReason::None;
}

SyntacticVerdict syntactic_verdict(const Reading& reading, const FilterConfig& cfg) {
  SyntacticVerdict v;
  if (detect_weather_time(reading, cfg.lexicon)) {
    v.kind = VerdictKind::WeatherTime;
    return v;
  }
  if (auto cue = filter_cleft(reading, cfg)) {
    v.kind = VerdictKind::Cleft;
    v.cleft_cue = cue;
    return v;
  }
  if (auto cand = filter_extraposition(reading, cfg)) {
    v.rejected = apply_additional_filters(*cand, cfg.flags);
    if (v.rejected == RejectReason::None) {
      v.kind = VerdictKind::ExtrapositionCandidate;
      v.candidate = std::move(cand);
    }
  }
  return v;
}

}  // namespace pleo
