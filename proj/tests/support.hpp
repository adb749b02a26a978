// Helpers shared by the unit tests and the acceptance runner.
#ifndef PLEO_TESTS_SUPPORT_HPP
#define PLEO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pleo/data.hpp"
#include "pleo/pipeline.hpp"
#include "pleo/rng.hpp"

namespace pleo::testing {

inline std::string data_path(const std::string& name) { return std::string(PLEO_TEST_DATA) + "/" + name; }

inline std::vector<TreebankSentence> load_data_treebank(const std::string& stem) {
  return read_treebank(data_path(stem + ".mrg"), data_path(stem + ".ids"));
}

inline const TreebankSentence& by_id(const std::vector<TreebankSentence>& sents, const std::string& id) {
  for (const auto& s : sents)
    if (s.id == id) return s;
  throw std::out_of_range("no sentence " + id);
}

// Syntactic outcome of one "it", folded over its readings:
// weather_time, then cleft:<cue>, then the first candidate, then the first
// rejection, otherwise none.
inline std::string syntactic_summary(const TreebankSentence& s, std::size_t token, const FilterConfig& cfg = {}) {
  ItInstance inst;
  bool found = false;
  for (const auto& i : find_it_instances(*s.dep, s.id))
    if (i.token_index == token) inst = i, found = true;
  if (!found) return "not-an-it";
  std::vector<SyntacticVerdict> vs;
  try {
    for (const auto& r : generate_readings(inst, s.dep, cfg.syntax)) vs.push_back(syntactic_verdict(r, cfg));
  } catch (const NoGoverningVerb&) {
    return "none";
  }
  for (const auto& v : vs)
    if (v.kind == VerdictKind::WeatherTime) return "weather_time";
  for (const auto& v : vs)
    if (v.kind == VerdictKind::Cleft) return "cleft:" + std::to_string(cue_number(*v.cleft_cue));
  for (const auto& v : vs)
    if (v.kind == VerdictKind::ExtrapositionCandidate)
      return "candidate:" + std::string(to_string(v.candidate->matrix_kind)) + ":" +
             std::string(to_string(v.candidate->clause.form));
  for (const auto& v : vs)
    if (v.rejected != RejectReason::None) return "filtered:" + std::string(to_string(v.rejected));
  return "none";
}

struct PinnedCase {
  std::string id;
  std::size_t token = 0;
  std::string expected;
};

inline std::vector<PinnedCase> read_pinned_expectations() {
  std::vector<PinnedCase> out;
  for (const auto& line : data_lines(read_file(data_path("pinned_expected.tsv")))) {
    auto f = split(line, '\t');
    out.push_back({f.at(0), std::stoul(f.at(1)), f.at(2)});
  }
  return out;
}

// Query strings printed for the two case-study sentences, keyed by
// sentence id, reading and purpose.
struct PrintedQuery {
  std::string sentence;
  std::size_t reading;
  QueryPurpose purpose;
  std::string text;
};

inline const std::vector<PrintedQuery>& printed_case_study_queries() {
  static const std::vector<PrintedQuery> q = {
      {"0231:015", 0, QueryPurpose::PatternI, "what is|was|'s difficult is|was to"},
      {"0231:015", 0, QueryPurpose::PatternII_it, "it is|was|'s difficult to read the|a|an|no|this|these|their|his|our"},
      {"0231:015", 0, QueryPurpose::PatternII_others,
       "which|this|who|he is|was|'s difficult to read the|a|an|no|this|these|their|his|our"},
      {"0231:015", 0, QueryPurpose::PatternIIp_it, "it is|was|'s difficult to"},
      {"0231:015", 0, QueryPurpose::PatternIIp_others, "which|this|who|he is|was|'s difficult to"},
      {"0331:033", 0, QueryPurpose::PatternI, "what appears|appeared is|was to"},
      {"0331:033", 0, QueryPurpose::PatternII_it, "it appears|appeared to be the|a|an|no|this|these|their|his|our"},
      {"0331:033", 0, QueryPurpose::PatternII_others,
       "which|this|who|he appears|appeared to be the|a|an|no|this|these|their|his|our"},
      {"0331:033", 0, QueryPurpose::PatternIIp_it, "it appears|appeared to"},
      {"0331:033", 0, QueryPurpose::PatternIIp_others, "which|this|who|he appears|appeared to"},
      {"0331:033", 1, QueryPurpose::PatternI, "what is|was|'s its|my|our|his|her|their|your sort is|was that"},
      {"0331:033", 1, QueryPurpose::PatternII_it,
       "it is|was|'s its|my|our|his|her|their|your sort that the|a|an|no|this|these|they|we|he|their|his|our"},
      {"0331:033", 1, QueryPurpose::PatternII_others,
       "which|this|who|he is|was|'s its|my|our|his|her|their|your sort that "
       "the|a|an|no|this|these|they|we|he|their|his|our"},
  };
  return q;
}

// Whitespace and typographic quote normalization for string comparison.
inline std::string normalize_query_text(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "\xE2\x80\x99") == 0) {
      out += '\'';
      i += 2;
      continue;
    }
    char c = s[i] == '|' ? ' ' : s[i];
    if (c == ' ' || c == '\t') {
      if (!out.empty() && out.back() != ' ') out += ' ';
    } else {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

inline std::shared_ptr<const Backend> case_study_fixture() {
  return std::make_shared<FixtureStore>(FixtureStore::load(data_path("case_study.fixture.tsv"), true));
}


// ---- randomized corpora and a naive scanning oracle ----

inline const std::vector<std::string>& oracle_vocabulary() {
  static const std::vector<std::string> v = {"it",   "is",  "was",   "'s",   "easy", "to",   "the",  "a",
                                             "what", "who", "which", "this", "he",   "that", "read", "hard"};
  return v;
}

inline std::vector<std::string> random_corpus(std::uint64_t seed, std::size_t max_sentences) {
  Rng rng = Rng::substream(seed, 0);
  const auto& v = oracle_vocabulary();
  static const std::vector<std::string> punct = {",", ".", "--", "``", "''"};
  const std::size_t n = 1 + rng.below(max_sentences);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    const std::size_t len = 1 + rng.below(14);
    for (std::size_t k = 0; k < len; ++k) {
      std::string w = rng.below(8) == 0 ? punct[rng.below(punct.size())] : v[rng.below(v.size())];
      if (rng.below(6) == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
      if (!s.empty()) s += rng.below(10) == 0 ? "  " : " ";
      s += w;
    }
    out.push_back(s);
  }
  return out;
}

inline Query random_query(Rng& rng) {
  const auto& v = oracle_vocabulary();
  Query q;
  const std::size_t n = 2 + rng.below(3);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> alts;
    const std::size_t k = 1 + rng.below(3);
    while (alts.size() < k) {
      std::string w = rng.below(20) == 0 ? "zebra" : v[rng.below(v.size())];
      if (std::find(alts.begin(), alts.end(), w) == alts.end()) alts.push_back(w);
    }
    q.slots.emplace_back(alts);
  }
  return q;
}

// Written independently of the index: lowercase, whitespace split, drop
// tokens with no letter or digit.
inline std::vector<std::string> oracle_tokens(const std::string& sentence) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    bool word = false;
    for (unsigned char c : cur) word = word || std::isalnum(c) || c >= 0x80;
    if (word) out.push_back(cur);
    cur.clear();
  };
  for (unsigned char c : sentence) {
    if (std::isspace(c)) {
      flush();
    } else {
      cur += static_cast<char>(std::tolower(c));
    }
  }
  flush();
  return out;
}

// Number of start positions at which the query matches.
inline std::size_t oracle_matches(const std::vector<std::string>& toks, const Query& q) {
  std::size_t hits = 0;
  for (std::size_t start = 0; start + q.slots.size() <= toks.size(); ++start) {
    bool ok = true;
    for (std::size_t k = 0; k < q.slots.size() && ok; ++k) {
      const auto& alts = q.slots[k].words;
      ok = std::find(alts.begin(), alts.end(), toks[start + k]) != alts.end();
    }
    hits += ok;
  }
  return hits;
}

struct OracleResult {
  std::uint64_t count = 0;
  std::vector<std::string> snippets;
  std::uint64_t exploded_sum = 0;  // sentences counted once per matching single-word variant
  bool disjoint = true;            // no sentence matches two variants
};

inline std::vector<std::vector<std::string>> oracle_tokenize(const std::vector<std::string>& corpus) {
  std::vector<std::vector<std::string>> out;
  out.reserve(corpus.size());
  for (const auto& s : corpus) out.push_back(oracle_tokens(s));
  return out;
}

inline OracleResult oracle_scan(const std::vector<std::string>& corpus,
                                const std::vector<std::vector<std::string>>& tokens, const Query& q,
                                std::size_t batch, bool with_explosion = true) {
  OracleResult r;
  const auto variants = with_explosion ? q.explode() : std::vector<Query>{};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (oracle_matches(tokens[i], q) > 0) {
      ++r.count;
      if (r.snippets.size() < batch) r.snippets.push_back(corpus[i]);
    }
    std::size_t matched_variants = 0;
    for (const auto& v : variants) matched_variants += oracle_matches(tokens[i], v) > 0;
    r.exploded_sum += matched_variants;
    if (matched_variants > 1) r.disjoint = false;
  }
  return r;
}

inline OracleResult oracle_scan(const std::vector<std::string>& corpus, const Query& q, std::size_t batch) {
  return oracle_scan(corpus, oracle_tokenize(corpus), q, batch);
}

// ---- decision oracle, transcribed directly from the rule text ----

struct OracleDecision {
  double W, r, r_prime, R;
  bool E;
};

inline OracleDecision oracle_decide(std::uint64_t n_w, double v_w, std::uint64_t n_it, std::uint64_t n_x,
                                    std::uint64_t n_it_p, std::uint64_t n_x_p, bool S, bool stepped,
                                    double N_min = 10, double R_exp = 0.15, double R_scarce = 1000,
                                    double R_zero = 100) {
  auto ratio = [&](double num, double den) {
    // "When both versions of the query yield insufficient results" -> scarce
    if (num < N_min && den < N_min) return R_scarce;
    if (num >= N_min && den == 0) return R_zero;
    return num / den;
  };
  OracleDecision d{};
  d.W = static_cast<double>(n_w) * v_w;
  d.r = ratio(static_cast<double>(n_x), static_cast<double>(n_it));
  d.r_prime = stepped ? ratio(static_cast<double>(n_x_p), static_cast<double>(n_it_p)) : d.r;
  const bool enough = static_cast<double>(n_it) >= N_min || static_cast<double>(n_x) >= N_min;
  d.R = enough ? d.r : d.r_prime;
  d.E = S ? (d.R < R_exp && d.W > N_min) : (d.R < R_exp);
  return d;
}

inline const std::vector<std::uint64_t>& decision_grid_counts() {
  static const std::vector<std::uint64_t> g = {0, 1, 9, 10, 11, 100, 100000};
  return g;
}
inline const std::vector<double>& decision_grid_vw() {
  static const std::vector<double> g = {0.0, 0.5, 0.7, 1.0};
  return g;
}

// Library path for one grid point.
inline EvidenceRecord library_evidence(std::uint64_t n_w, double v_w, std::uint64_t n_it, std::uint64_t n_x,
                                       std::uint64_t n_it_p, std::uint64_t n_x_p, bool S, bool stepped,
                                       const DecisionConstants& c = {}) {
  EvidenceRecord ev;
  ev.n_w = n_w;
  ev.v_w = v_w;
  ev.n_it = n_it;
  ev.n_x = n_x;
  ev.n_it_prime = stepped ? n_it_p : n_it;
  ev.n_x_prime = stepped ? n_x_p : n_x;
  ev.stepped_down = stepped;
  ev.W = static_cast<double>(n_w) * v_w;
  ev.r = compute_ratio(n_x, n_it, c);
  ev.r_prime = stepped ? compute_ratio(n_x_p, n_it_p, c) : ev.r;
  ev.R = synthesize_R(ev.r, ev.r_prime, n_it, n_x, c);
  ev.S = S;
  ev.E = classify_reading(ev, c);
  return ev;
}

// Runs the exhaustive grid; returns (agreements, total).
inline std::pair<std::size_t, std::size_t> run_decision_grid() {
  std::size_t agree = 0, total = 0;
  const auto& g = decision_grid_counts();
  for (auto n_w : g)
    for (auto n_it : g)
      for (auto n_x : g)
        for (auto n_it_p : g)
          for (auto n_x_p : g)
            for (double v_w : decision_grid_vw())
              for (bool S : {false, true}) {
                auto want = oracle_decide(n_w, v_w, n_it, n_x, n_it_p, n_x_p, S, true);
                auto got = library_evidence(n_w, v_w, n_it, n_x, n_it_p, n_x_p, S, true);
                ++total;
                agree += got.E == want.E && got.R == want.R && got.r == want.r && got.r_prime == want.r_prime &&
                         got.W == want.W;
              }
  return {agree, total};
}

}  // namespace pleo::testing

#endif
