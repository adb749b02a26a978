#include "pleo/querygen.hpp"

#include <algorithm>

#include "pleo/data.hpp"
#include "pleo/morphology.hpp"

namespace pleo {

// ------------------------------------------------------------------- StubSet

StubSet StubSet::parse(std::string_view text) {
  StubSet s;
  for (const auto& line : data_lines(text)) {
    auto f = split_ws(line);
    if (f.size() < 2) throw std::runtime_error("stub list '" + line + "' has no words");
    std::vector<std::string> words;
    auto add = [&](const std::string& w) {
      if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    };
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (f[i][0] == '$') {
        auto it = s.lists_.find(f[i].substr(1));
        if (it == s.lists_.end())
          throw std::runtime_error("stub list " + f[0] + " refers to undefined list " + f[i]);
        for (const auto& w : it->second) add(w);
      } else {
        add(to_lower(f[i]));
      }
    }
    s.lists_[f[0]] = std::move(words);
  }
  return s;
}

StubSet StubSet::from_file(const std::string& path) { return parse(read_file(path)); }

const StubSet& StubSet::builtin() {
  static const StubSet s = parse(embedded_data("stubs.txt"));
  return s;
}

const std::vector<std::string>& StubSet::list(const std::string& name) const {
  auto it = lists_.find(name);
  if (it == lists_.end()) throw std::out_of_range("no stub list named " + name);
  return it->second;
}

Slot StubSet::slot(const std::string& name, bool simple) const {
  const auto& l = list(name);
  return simple ? Slot(l.front()) : Slot(l);
}

UnsupportedClauseForm::UnsupportedClauseForm(ClauseForm f)
    : std::invalid_argument("cannot simplify a clause of form " + std::string(to_string(f))) {}

std::vector<Slot> SimplifiedClause::slots() const {
  std::vector<Slot> out = head;
  if (stub) out.push_back(*stub);
  return out;
}

const Query* QueryBundle::find(QueryPurpose p) const {
  for (const auto& q : queries)
    if (q.purpose == p) return &q;
  return nullptr;
}

namespace {

const Morphology& morph() { return Morphology::builtin(); }

void append(std::vector<Slot>& to, const std::vector<Slot>& from) { to.insert(to.end(), from.begin(), from.end()); }

bool adjectival(const std::string& label) {
  return label == "ADJP" || label == "WHADJP" || label == "JJ" || label == "JJR" || label == "JJS";
}

bool nominal(const DepNode& n) {
  const auto& l = predicate_label(n);
  return l == "NP" || l == "NX" || is_noun_tag(l) || l == "PRP";
}

std::vector<Slot> particles(const DepTree& dep, std::size_t verb) {
  std::vector<Slot> out;
  for (std::size_t d : dep.dependents(verb))
    if (d > verb && (dep[d].label() == "PRT" || dep[d].tag == "RP")) out.emplace_back(lower(dep[d]));
  return out;
}

}  // namespace

Slot expand_lemma(const std::string& lemma, const QueryOptions& opt) {
  if (lemma == "be") return opt.simple_forms ? Slot("is") : Slot{"is", "was", "'s"};
  if (opt.simple_forms) return Slot(morph().third_singular(lemma));
  return Slot{morph().third_singular(lemma), morph().past(lemma)};
}

std::vector<Slot> expand_verb(const DepTree& dep, std::size_t verb, const QueryOptions& opt) {
  const auto& v = dep[verb];
  std::vector<Slot> out{expand_lemma(morph().verb_lemma(v.token, v.tag), opt)};
  append(out, particles(dep, verb));
  return out;
}

std::vector<Slot> truncate_object(const DepTree& dep, std::optional<std::size_t> phrase,
                                  const std::vector<std::size_t>& modifiers, const StubSet& stubs,
                                  const QueryOptions& opt) {
  std::vector<Slot> out;
  if (!phrase) return out;
  const std::size_t p = *phrase;
  const auto& n = dep[p];
  const auto& label = predicate_label(n);

  if (label == "PP" || n.tag == "IN" || n.tag == "TO") {
    out.emplace_back(lower(n));
    for (std::size_t d : dep.dependents(p))
      if (d > p && !is_punctuation(dep[d])) {
        append(out, truncate_object(dep, d, {}, stubs, opt));
        break;
      }
    return out;
  }
  if (adjectival(label)) {
    for (std::size_t m : modifiers)
      if (m < p) out.emplace_back(lower(dep[m]));
    out.emplace_back(lower(n));
    return out;
  }
  if (n.tag == "CD" || label == "QP") return {Slot("a"), Slot("lot")};
  if (n.tag == "NNP" || n.tag == "NNPS" || n.tag == "PRP") return {stubs.slot("PRP", opt.simple_forms)};
  if (nominal(n)) {
    bool possessed = false, of_pp = false;
    std::optional<std::string> det;
    for (std::size_t d : dep.dependents(p)) {
      const auto& c = dep[d];
      if (d < p) {
        if (c.tag == "PRP$" || c.tag == "WP$") possessed = true;
        for (std::size_t e : dep.dependents(d))
          if (dep[e].tag == "POS") possessed = true;
        if ((c.tag == "DT" || c.tag == "PDT") && !det) det = lower(c);
      } else if (c.label() == "PP" && lower(c) == "of") {
        of_pp = true;
      }
    }
    if (possessed || of_pp) {
      out.push_back(stubs.slot("PRPS", opt.simple_forms));
    } else if (det) {
      if (*det == "the" || *det == "this" || *det == "that")
        out.push_back(stubs.slot("DTTS", opt.simple_forms));
      else if (*det == "these" || *det == "those")
        out.push_back(stubs.slot("DTTP", opt.simple_forms));
      else
        out.push_back(stubs.slot("DTA", opt.simple_forms));
    }
    out.emplace_back(lower(n));
    return out;
  }
  out.emplace_back(lower(n));
  return out;
}

SimplifiedClause simplify_clause(const DepTree& dep, const ClauseInfo& ci, const StubSet& stubs,
                                 const QueryOptions& opt) {
  SimplifiedClause sc;
  const auto& h = dep[ci.head];
  auto object_stub = [&]() -> std::optional<Slot> {
    if (ci.embedded_clause) {
      ClauseInfo inner = analyze_clause(dep, *ci.embedded_clause);
      if (inner.complementizer) return Slot(lower(dep[*inner.complementizer]));
    }
    if (ci.object) return stubs.slot("OBJ", opt.simple_forms);
    return std::nullopt;
  };
  switch (ci.form) {
    case ClauseForm::Infinitive:
    case ClauseForm::ForInfinitive: {
      sc.head.emplace_back("to");
      if (ci.form == ClauseForm::ForInfinitive && ci.passive) {
        // "for products to be sold" -> "to sell" + object stub
        sc.head.emplace_back(morph().verb_lemma(h.token, h.tag));
        append(sc.head, particles(dep, ci.head));
        sc.stub = stubs.slot("OBJ", opt.simple_forms);
        return sc;
      }
      for (std::size_t d : dep.dependents(ci.head))
        if (d < ci.head && (!ci.infinitive_marker || d > *ci.infinitive_marker) &&
            is_auxiliary_of(dep, d, ci.head) && dep[d].tag != "TO")
          sc.head.emplace_back(lower(dep[d]));
      sc.head.emplace_back(lower(h));
      append(sc.head, particles(dep, ci.head));
      sc.stub = object_stub();
      return sc;
    }
    case ClauseForm::Gerund:
      sc.head.emplace_back(lower(h));
      append(sc.head, particles(dep, ci.head));
      sc.stub = object_stub();
      return sc;
    case ClauseForm::FullWithComplementizer:
      sc.head.emplace_back(lower(dep[*ci.complementizer]));
      sc.stub = stubs.slot("SUBJ", opt.simple_forms);
      return sc;
    case ClauseForm::FullBare:
      sc.head.emplace_back("that");
      sc.stub = stubs.slot("SUBJ", opt.simple_forms);
      return sc;
    default:
      throw UnsupportedClauseForm(ci.form);
  }
}

std::vector<Query> build_pattern3(const ExtrapositionCandidate& cand, const QueryOptions& opt) {
  const DepTree& dep = cand.reading.dep();
  if (!cand.predicate || !adjectival(predicate_label(dep[*cand.predicate])))
    throw NotApplicable("pattern III needs an adjectival predicate");
  const ClauseInfo& ci = cand.clause;
  if (ci.form != ClauseForm::Infinitive || ci.object || ci.embedded_clause)
    throw NotApplicable("pattern III needs an infinitive whose verb has no object");
  const auto& adj = dep[*cand.predicate];
  const auto& verb = dep[ci.head];
  const std::string base = morph().adjective_base(adj.token, adj.tag);
  const std::string lemma = morph().verb_lemma(verb.token, verb.tag);
  const std::string gerund = morph().gerund(lemma);
  const bool vowel = !base.empty() && std::string_view("aeiou").find(base[0]) != std::string_view::npos;
  std::vector<Query> out;
  out.push_back(Query{{Slot(vowel ? "an" : "a"), Slot(base + "-to-" + lemma)}, QueryPurpose::P3_compound});
  out.push_back(Query{{Slot("that"), Slot(gerund), opt.simple_forms ? Slot("in") : Slot{"in", "from"}},
                      QueryPurpose::P3_gerund_prep});
  out.push_back(Query{{Slot("that"), Slot(gerund), Slot("the")}, QueryPurpose::P3_gerund_det});
  return out;
}

QueryBundle build_bundle(const ExtrapositionCandidate& cand, const StubSet& stubs,
                         const BackendCapabilities& caps, bool pattern3) {
  QueryOptions opt;
  opt.simple_forms = !caps.supports_alternation;
  const Reading& r = cand.reading;
  const DepTree& dep = r.dep();
  if (r.matrix_verb >= dep.size()) throw NoMatrixVerb("reading has no matrix verb");
  QueryBundle b;
  b.candidate = cand;

  if (cand.matrix_kind == MatrixKind::ObjectOfVerb || cand.matrix_kind == MatrixKind::ObjectOfPreposition) {
    std::vector<Slot> head{Slot(lower(dep[r.matrix_verb]))};
    append(head, particles(dep, r.matrix_verb));
    if (r.preposition) head.emplace_back(lower(dep[*r.preposition]));
    for (auto [pronoun, purpose] : {std::pair{"it", QueryPurpose::ObjectIt}, std::pair{"them", QueryPurpose::ObjectThem}}) {
      Query q{head, purpose};
      q.slots.emplace_back(pronoun);
      q.slots.emplace_back("that");
      q.slots.push_back(stubs.slot("THE", opt.simple_forms));
      b.queries.push_back(std::move(q));
    }
  } else {
    std::vector<Slot> vp = r.virtual_copula ? std::vector<Slot>{expand_lemma("be", opt)}
                                            : expand_verb(dep, r.matrix_verb, opt);
    append(vp, truncate_object(dep, cand.predicate, r.modifiers, stubs, opt));

    const ClauseInfo& ci = cand.clause;
    Slot what_stub;
    switch (ci.form) {
      case ClauseForm::Infinitive:
      case ClauseForm::ForInfinitive: what_stub = Slot("to"); break;
      case ClauseForm::Gerund: what_stub = Slot(lower(dep[ci.head])); break;
      case ClauseForm::FullWithComplementizer: what_stub = Slot(lower(dep[*ci.complementizer])); break;
      case ClauseForm::FullBare: what_stub = Slot("that"); break;
      default: throw UnsupportedClauseForm(ci.form);
    }
    Query one{{Slot("what")}, QueryPurpose::PatternI};
    append(one.slots, vp);
    one.slots.push_back(opt.simple_forms ? Slot("is") : Slot{"is", "was"});
    one.slots.push_back(what_stub);
    b.queries.push_back(std::move(one));

    const SimplifiedClause sc = simplify_clause(dep, ci, stubs, opt);
    const Slot others = stubs.slot("OTHERS");
    auto pair = [&](const std::vector<Slot>& tail, QueryPurpose it_p, QueryPurpose others_p) {
      Query a{{Slot("it")}, it_p};
      append(a.slots, vp);
      append(a.slots, tail);
      Query o = a;
      o.slots[0] = others;
      o.purpose = others_p;
      b.queries.push_back(std::move(a));
      b.queries.push_back(std::move(o));
    };
    pair(sc.slots(), QueryPurpose::PatternII_it, QueryPurpose::PatternII_others);
    if (ci.form == ClauseForm::Infinitive || ci.form == ClauseForm::ForInfinitive || ci.form == ClauseForm::Gerund)
      pair({Slot("to")}, QueryPurpose::PatternIIp_it, QueryPurpose::PatternIIp_others);
    if (pattern3) {
      try {
        for (auto& q : build_pattern3(cand, opt)) b.queries.push_back(std::move(q));
      } catch (const NotApplicable&) {
      }
    }
  }
  for (const auto& q : b.queries) q.validate();
  return b;
}

}  // namespace pleo
