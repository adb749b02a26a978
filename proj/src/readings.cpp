#include "pleo/readings.hpp"

#include <algorithm>

#include "pleo/data.hpp"
#include "pleo/morphology.hpp"

namespace pleo {

std::string_view to_string(GrammaticalRole role) {
  switch (role) {
    case GrammaticalRole::Subject: return "subject";
    case GrammaticalRole::VerbObject: return "verb-object";
    case GrammaticalRole::PrepositionObject: return "preposition-object";
  }
  return "?";
}

std::string_view to_string(ClauseForm form) {
  switch (form) {
    case ClauseForm::Infinitive: return "infinitive";
    case ClauseForm::ForInfinitive: return "for-infinitive";
    case ClauseForm::Gerund: return "gerund";
    case ClauseForm::FullWithComplementizer: return "full-complementizer";
    case ClauseForm::FullBare: return "full-bare";
    case ClauseForm::Relative: return "relative";
    case ClauseForm::Other: return "other";
  }
  return "?";
}

NoGoverningVerb::NoGoverningVerb(std::size_t token_index)
    : std::runtime_error("no verb governs the pronoun at token " + std::to_string(token_index)) {}

bool is_verb_tag(std::string_view tag) { return tag.substr(0, 2) == "VB" || tag == "MD"; }

bool is_noun_tag(std::string_view tag) {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool is_punctuation(const DepNode& n) {
  static const std::set<std::string, std::less<>> tags = {",", ".", ":", "``", "''", "-LRB-", "-RRB-"};
  return tags.count(n.tag) > 0;
}

bool is_clause_label(std::string_view label) {
  return label == "S" || label == "SBAR" || label == "SQ" || label == "SBARQ" || label == "SINV";
}

const std::string& predicate_label(const DepNode& n) {
  for (auto it = n.projections.rbegin(); it != n.projections.rend(); ++it)
    if (!is_clause_label(*it)) return *it;
  return n.tag;
}

std::string lower(const DepNode& n) { return to_lower(n.token); }

bool is_verbal(const DepNode& n) { return is_verb_tag(n.tag) || n.projects("VP"); }

bool is_copula(const DepNode& n) {
  if (!is_verb_tag(n.tag)) return false;
  const std::string w = lower(n);
  if (w == "'s") return n.tag == "VBZ";
  return is_be_form(w);
}

bool is_auxiliary_of(const DepTree& dep, std::size_t aux, std::size_t verb) {
  const auto& a = dep[aux];
  if (a.head != static_cast<int>(verb) || aux > verb || !a.projections.empty()) return false;
  if (a.tag == "MD" || a.tag == "TO") return true;
  if (!is_verb_tag(a.tag)) return false;
  const std::string lemma = Morphology::builtin().verb_lemma(a.token, a.tag);
  return lemma == "be" || lemma == "have" || lemma == "do";
}

std::string Reading::matrix_verb_tag() const {
  return virtual_copula ? std::string("VBX") : dep()[matrix_verb].tag;
}

std::string Reading::matrix_verb_form() const {
  return virtual_copula ? std::string("be") : dep()[matrix_verb].token;
}

bool Reading::copular() const { return virtual_copula || is_copula(dep()[matrix_verb]); }

namespace {

bool is_adverbial(const DepNode& n) {
  return n.label() == "ADVP" || n.tag == "RB" || n.tag == "RBR" || n.tag == "RBS";
}

bool is_nominal(const DepNode& n) {
  const auto& l = n.label();
  return l == "NP" || l == "NX" || is_noun_tag(l) || l == "PRP" || l == "CD" || l == "QP";
}

bool is_wh_nominal(const DepNode& n) {
  return n.tag == "WDT" || n.tag == "WP" || n.tag == "WP$" || n.label() == "WHNP";
}

bool is_finite_tag(std::string_view tag) {
  return tag == "VBZ" || tag == "VBD" || tag == "VBP" || tag == "MD";
}

const std::set<std::string, std::less<>>& adverbial_cues() {
  static const std::set<std::string, std::less<>> words = {
      "here", "there", "today", "yesterday", "tomorrow", "now", "then", "tonight"};
  return words;
}

// First verbal ancestor of `from`, inclusive.
std::optional<std::size_t> verbal_ancestor(const DepTree& dep, std::size_t from) {
  int cur = static_cast<int>(from);
  std::size_t steps = 0;
  while (cur >= 0 && steps++ <= dep.size()) {
    if (is_verbal(dep[static_cast<std::size_t>(cur)])) return static_cast<std::size_t>(cur);
    cur = dep[static_cast<std::size_t>(cur)].head;
  }
  return std::nullopt;
}

bool licensed(ClauseForm f) { return f != ClauseForm::Relative && f != ClauseForm::Other; }

// A subject-less to-infinitive continuing the verb chain.
bool is_verbal_complement(const DepTree& dep, std::size_t d, const SyntaxConfig& cfg) {
  if (!is_verbal(dep[d]) || !(dep[d].label() == "S" || dep[d].label() == "VP")) return false;
  ClauseInfo ci = analyze_clause(dep, d, cfg);
  return ci.form == ClauseForm::Infinitive && !ci.subject && !ci.complementizer;
}

class ReadingBuilder {
 public:
  ReadingBuilder(const ItInstance& inst, const DepTreePtr& tree, const SyntaxConfig& cfg)
      : inst_(inst), tree_(tree), dep_(*tree), cfg_(cfg) {}

  std::vector<Reading> build() {
    const std::size_t it = inst_.token_index;
    const int h = dep_[it].head;
    if (h < 0) throw NoGoverningVerb(it);
    const auto head = static_cast<std::size_t>(h);
    const DepNode& H = dep_[head];

    if (H.tag == "IN" || H.tag == "TO") {
      auto g = verbal_ancestor(dep_, head);
      if (!g) throw NoGoverningVerb(it);
      Reading r = base(*g);
      r.preposition = head;
      choose_clause(r, right_dependents(*g, it), std::nullopt);
      return {r};
    }

    if (!is_verbal(H) && H.projects("S")) {
      auto g = verbal_ancestor(dep_, head);
      if (!g) throw NoGoverningVerb(it);
      Reading r = base(*g);
      r.virtual_copula = true;
      r.matrix_object = head;
      collect_modifiers(r, head);
      auto candidates = right_dependents(head, head);
      auto outer = right_dependents(*g, dep_[head].span_end - 1);
      candidates.insert(candidates.end(), outer.begin(), outer.end());
      choose_clause(r, candidates, head);
      return {r};
    }

    auto g = verbal_ancestor(dep_, head);
    if (!g) throw NoGoverningVerb(it);

    if (inst_.role != GrammaticalRole::Subject) {
      Reading r = base(*g);
      choose_clause(r, right_dependents(*g, it), std::nullopt);
      return {r};
    }

    std::vector<Reading> out;
    std::size_t v = *g;
    for (std::size_t depth = 0; depth < dep_.size(); ++depth) {
      out.push_back(fill(v, depth == 0));
      std::optional<std::size_t> next;
      bool blocked = false;
      for (std::size_t d : dep_.dependents(v)) {
        if (d < v || d == it) continue;
        const auto& n = dep_[d];
        if (is_punctuation(n) || is_adverbial(n)) continue;
        if (!next && is_verbal_complement(dep_, d, cfg_)) {
          next = d;
          continue;
        }
        blocked = true;
      }
      if (blocked || !next) break;
      v = *next;
    }
    return out;
  }

 private:
  Reading base(std::size_t verb) const {
    Reading r;
    r.tree = tree_;
    r.it = inst_;
    r.matrix_verb = verb;
    return r;
  }

  std::vector<std::size_t> right_dependents(std::size_t of, std::size_t after) const {
    std::vector<std::size_t> out;
    for (std::size_t d : dep_.dependents(of))
      if (d > after) out.push_back(d);
    return out;
  }

  void collect_modifiers(Reading& r, std::size_t pred) const {
    auto is_mod = [&](std::size_t i) {
      const std::string w = lower(dep_[i]);
      return w == "not" || w == "n't" || w == "too";
    };
    for (std::size_t d : dep_.dependents(pred))
      if (d < pred && dep_[d].projections.empty() && is_mod(d)) r.modifiers.push_back(d);
    if (pred > 0) {
      std::size_t prev = dep_[pred].span_begin;
      if (prev > 0 && is_mod(prev - 1) && dep_[prev - 1].head == static_cast<int>(r.matrix_verb))
        r.modifiers.push_back(prev - 1);
    }
    std::sort(r.modifiers.begin(), r.modifiers.end());
    r.modifiers.erase(std::unique(r.modifiers.begin(), r.modifiers.end()), r.modifiers.end());
  }

  Reading fill(std::size_t v, bool outermost) const {
    Reading r = base(v);
    const std::size_t it = inst_.token_index;
    const std::size_t after = std::max(v, it);
    const auto right = right_dependents(v, after);
    std::optional<std::size_t> pred;
    if (is_copula(dep_[v])) {
      for (std::size_t d : right) {
        const auto& n = dep_[d];
        if (is_punctuation(n)) continue;
        if (is_clause_label(n.label())) break;
        const auto& l = n.label();
        if (l == "NP" || l == "ADJP" || l == "PP" || l == "WHADJP" || l == "QP" || l == "NX" ||
            is_noun_tag(l) || l == "JJ" || l == "JJR" || l == "PRP" ||
            (is_adverbial(n) && adverbial_cues().count(lower(n)))) {
          pred = d;
          break;
        }
      }
      if (!pred) {
        // fronted predicate: "how hard it was", "the easier it is"
        for (std::size_t d : dep_.dependents(v)) {
          const auto& l = dep_[d].label();
          if (d < it && dep_[d].span_end == it && (l == "ADJP" || l == "WHADJP" || l == "NP"))
            pred = d;
        }
      }
    } else {
      for (std::size_t d : right) {
        const auto& n = dep_[d];
        if (is_clause_label(n.label())) break;
        if (is_nominal(n)) {
          pred = d;
          break;
        }
      }
    }
    r.matrix_object = pred;
    if (pred) collect_modifiers(r, *pred);

    std::vector<std::size_t> candidates;
    for (std::size_t d : right)
      if (!pred || d > *pred) candidates.push_back(d);
    choose_clause(r, candidates, pred);

    if (outermost && !r.subordinate_clause) {
      const auto& V = dep_[v];
      if (V.head >= 0) {
        const auto host = static_cast<std::size_t>(V.head);
        bool only_light = true;
        for (std::size_t d : right)
          if (!is_punctuation(dep_[d]) && !is_adverbial(dep_[d])) only_light = false;
        const bool shaped = V.label() == "PRN" || (is_clause_label(V.label()) && v < host && only_light);
        if (shaped && is_verbal(dep_[host]) && is_finite_clause(host)) {
          r.parenthetical = true;
          r.subordinate_clause = host;
        }
      }
    }
    return r;
  }

  bool is_finite_clause(std::size_t v) const {
    return analyze_clause(dep_, v, cfg_).finite;
  }

  void choose_clause(Reading& r, const std::vector<std::size_t>& candidates,
                     std::optional<std::size_t> pred) const {
    std::optional<std::size_t> any, good;
    for (std::size_t d : candidates) {
      if (!is_clause_label(dep_[d].label()) || !is_verbal(dep_[d])) continue;
      if (!any) any = d;
      if (licensed(analyze_clause(dep_, d, cfg_).form)) {
        good = d;
        break;
      }
    }
    if (!good && !any && pred) any = search_inside(*pred, 0);
    auto chosen = good ? good : any;
    if (!chosen) return;
    r.subordinate_clause = chosen;
    r.complementizer = analyze_clause(dep_, *chosen, cfg_).complementizer;
  }

  // Clause hanging off a predicate, possibly through an of-PP:
  // "the sort of hold one makes while ..."
  std::optional<std::size_t> search_inside(std::size_t node, int depth) const {
    if (depth > 3) return std::nullopt;
    for (std::size_t d : dep_.dependents(node)) {
      if (d < node) continue;
      const auto& n = dep_[d];
      if (is_clause_label(n.label()) && is_verbal(n)) return d;
    }
    for (std::size_t d : dep_.dependents(node)) {
      if (d < node) continue;
      const auto& n = dep_[d];
      if (n.label() == "PP") {
        for (std::size_t o : dep_.dependents(d))
          if (o > d && is_nominal(dep_[o]))
            if (auto found = search_inside(o, depth + 1)) return found;
      } else if (n.label() == "NP" || n.label() == "ADJP") {
        if (auto found = search_inside(d, depth + 1)) return found;
      }
    }
    return std::nullopt;
  }

  const ItInstance& inst_;
  const DepTreePtr& tree_;
  const DepTree& dep_;
  const SyntaxConfig& cfg_;
};

}  // namespace

std::vector<ItInstance> find_it_instances(const DepTree& dep, const std::string& sentence_id) {
  std::vector<ItInstance> out;
  for (std::size_t i = 0; i < dep.size(); ++i) {
    const auto& n = dep[i];
    if (n.tag != "PRP" || lower(n) != "it") continue;
    ItInstance inst{sentence_id, i, GrammaticalRole::Subject};
    if (n.head >= 0) {
      const auto h = static_cast<std::size_t>(n.head);
      const auto& H = dep[h];
      if (H.tag == "IN" || H.tag == "TO") {
        inst.role = GrammaticalRole::PrepositionObject;
      } else if (is_verbal(H)) {
        if (i > h && (H.projects("VP") || !(H.projects("SQ") || H.projects("SINV"))))
          inst.role = GrammaticalRole::VerbObject;
      } else if (H.projects("S")) {
        inst.role = GrammaticalRole::VerbObject;
      } else if (auto g = verbal_ancestor(dep, h); g && i > *g) {
        inst.role = GrammaticalRole::VerbObject;
      }
    }
    out.push_back(inst);
  }
  return out;
}

ClauseInfo analyze_clause(const DepTree& dep, std::size_t head, const SyntaxConfig& cfg) {
  ClauseInfo ci;
  ci.head = head;
  ci.first_token = dep[head].span_begin;
  const auto& H = dep[head];
  bool be_aux = false;
  bool first = true;
  for (std::size_t d : dep.dependents(head)) {
    const auto& n = dep[d];
    if (d > head) break;
    if (is_punctuation(n)) continue;
    const std::string w = lower(n);
    if (first) {
      first = false;
      if (n.tag == "IN" || n.tag == "WRB" || n.label() == "WHADVP" || is_wh_nominal(n) ||
          (n.tag == "DT" && w == "that")) {
        ci.complementizer = d;
        continue;
      }
    }
    if (n.tag == "TO" && n.projections.empty()) {
      ci.infinitive_marker = d;
    } else if (is_auxiliary_of(dep, d, head)) {
      if (is_finite_tag(n.tag)) ci.finite = true;
      if (is_be_form(w)) be_aux = true;
    } else if (is_nominal(n) || n.tag == "EX") {
      ci.subject = d;
    }
  }
  if (is_finite_tag(H.tag)) ci.finite = true;
  ci.passive = be_aux && H.tag == "VBN";
  for (std::size_t d : dep.dependents(head)) {
    if (d < head) continue;
    const auto& n = dep[d];
    if (n.label() == "PRT" || n.tag == "RP") {
      ci.particles.push_back(d);
      continue;
    }
    if (!ci.object && !ci.embedded_clause && is_nominal(n)) {
      ci.object = d;
      continue;
    }
    if (!ci.embedded_clause && is_clause_label(n.label()) && is_verbal(n) && d != head) {
      for (std::size_t c : dep.dependents(d)) {
        if (c > d) break;
        if (is_punctuation(dep[c])) continue;
        const std::string cw = lower(dep[c]);
        if (cw == "that" || cw == "whether" || cw == "if" || cfg.wh_adverbs.count(cw) || is_wh_nominal(dep[c]))
          ci.embedded_clause = d;
        break;
      }
    }
  }

  if (ci.infinitive_marker) {
    ci.finite = false;
    const bool for_comp = ci.complementizer && lower(dep[*ci.complementizer]) == "for";
    ci.form = for_comp ? ClauseForm::ForInfinitive : ClauseForm::Infinitive;
  } else if (ci.finite) {
    if (!ci.complementizer) {
      ci.form = ClauseForm::FullBare;
    } else {
      const auto& c = dep[*ci.complementizer];
      const std::string w = lower(c);
      if (is_wh_nominal(c))
        ci.form = ClauseForm::Relative;
      else if (w == "that" || w == "whether" || w == "if" || cfg.wh_adverbs.count(w))
        ci.form = ClauseForm::FullWithComplementizer;
      else
        ci.form = ClauseForm::Other;
    }
  } else if (H.tag == "VBG" && !ci.complementizer) {
    ci.form = ClauseForm::Gerund;
  }
  return ci;
}

std::vector<Reading> generate_readings(const ItInstance& instance, const DepTreePtr& dep,
                                       const SyntaxConfig& cfg) {
  return ReadingBuilder(instance, dep, cfg).build();
}

}  // namespace pleo
