#include "pleo/pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <stdexcept>
#include <thread>

#include "pleo/data.hpp"

namespace pleo {

std::map<std::size_t, std::string> parse_id_map(std::string_view text, const std::string& source) {
  std::map<std::size_t, std::string> out;
  std::size_t lineno = 0;
  for (auto line : split(text, '\n')) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto f = split(t, '\t');
    if (f.size() != 2) throw std::runtime_error(source + ":" + std::to_string(lineno) + ": expected line<TAB>id");
    std::size_t n = 0;
    try {
      n = std::stoul(trim(f[0]));
    } catch (const std::exception&) {
      throw std::runtime_error(source + ":" + std::to_string(lineno) + ": bad line number '" + f[0] + "'");
    }
    if (!out.emplace(n, trim(f[1])).second)
      throw std::runtime_error(source + ":" + std::to_string(lineno) + ": line " + f[0] + " mapped twice");
  }
  return out;
}

std::vector<TreebankSentence> load_treebank(std::string_view text, const std::string& source,
                                            const std::map<std::size_t, std::string>& ids) {
  std::vector<TreebankSentence> out;
  for (auto& ps : parse_bracketed_with_lines(text)) {
    TreebankSentence s;
    s.line = ps.line;
    auto it = ids.find(ps.line);
    s.id = it != ids.end() ? it->second : source + ":" + std::to_string(ps.line);
    s.dep = std::make_shared<const DepTree>(to_dependency(ps.tree));
    for (const auto& [tok, tag] : ps.tree.leaves()) s.tokens.push_back(tok);
    s.tree = std::move(ps.tree);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TreebankSentence> read_treebank(const std::string& path, const std::optional<std::string>& ids_path) {
  std::map<std::size_t, std::string> ids;
  if (ids_path) ids = parse_id_map(read_file(*ids_path), *ids_path);
  return load_treebank(read_file(path), std::filesystem::path(path).filename().string(), ids);
}

Classifier::Classifier(ClassifierConfig cfg, std::shared_ptr<const Backend> backend)
    : cfg_(std::move(cfg)), backend_(std::move(backend)) {
  cfg_.constants.validate();
  if (!backend_) throw std::invalid_argument("classifier needs a backend");
}

ReadingResult Classifier::classify_reading_of(const Reading& r) const {
  ReadingResult out;
  out.reading = r;
  out.verdict = syntactic_verdict(r, cfg_.filters);
  if (out.verdict.kind != VerdictKind::ExtrapositionCandidate) return out;
  out.bundle = build_bundle(*out.verdict.candidate, cfg_.stubs, backend_->capabilities(), cfg_.pattern3);
  EvidenceOptions opt;
  opt.pattern3_veto = cfg_.pattern3;
  opt.pattern3_ratio = cfg_.pattern3_ratio;
  out.evidence = gather_evidence(*out.bundle, *backend_, cfg_.constants, opt);
  return out;
}

std::vector<SentenceVerdict> Classifier::classify(const TreebankSentence& s) const {
  std::vector<SentenceVerdict> out;
  for (const auto& inst : find_it_instances(*s.dep, s.id)) {
    SentenceVerdict v;
    v.sentence_id = s.id;
    v.token_index = inst.token_index;
    v.role = inst.role;
    try {
      for (const auto& reading : generate_readings(inst, s.dep, cfg_.filters.syntax)) {
        try {
          v.readings.push_back(classify_reading_of(reading));
        } catch (const UnsupportedClauseForm& e) {
          v.note += std::string(v.note.empty() ? "" : "; ") + e.what();
        } catch (const InvalidQuery& e) {
          v.note += std::string(v.note.empty() ? "" : "; ") + "query rejected: " + e.what();
        }
      }
    } catch (const NoGoverningVerb& e) {
      v.note = e.what();
    }
    v.label = classify_sentence(v.readings);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SentenceVerdict> Classifier::classify_all(const std::vector<TreebankSentence>& sentences,
                                                      unsigned threads) const {
  std::vector<std::vector<SentenceVerdict>> per(sentences.size());
  std::vector<std::exception_ptr> errors(sentences.size());
  threads = std::max(1u, threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < sentences.size();) {
      try {
        per[i] = classify(sentences[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // first failure in input order
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<SentenceVerdict> out;
  for (auto& v : per)
    for (auto& x : v) out.push_back(std::move(x));
  return out;
}

std::vector<SentenceVerdict> pha_classify_all(const std::vector<TreebankSentence>& sentences, const PHAConfig& cfg) {
  std::vector<SentenceVerdict> out;
  for (const auto& s : sentences) {
    for (const auto& inst : find_it_instances(*s.dep, s.id)) {
      SentenceVerdict v;
      v.sentence_id = s.id;
      v.token_index = inst.token_index;
      v.role = inst.role;
      if (auto m = pha_match(s.tokens, inst.token_index, cfg)) v.note = "pattern it..." + m->marker;
      v.label = pha_label(s.tokens, inst.token_index, cfg);
      out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

nlohmann::json opt_index(const std::optional<std::size_t>& i) {
  return i ? nlohmann::json(*i) : nlohmann::json(nullptr);
}

nlohmann::json evidence_json(const EvidenceRecord& ev) {
  nlohmann::json j;
  j["n_w"] = ev.n_w;
  j["v_w"] = ev.v_w;
  j["W"] = ev.W;
  j["n_it"] = ev.n_it;
  j["n_x"] = ev.n_x;
  j["n_it_prime"] = ev.n_it_prime;
  j["n_x_prime"] = ev.n_x_prime;
  j["r"] = ev.r;
  j["r_prime"] = ev.r_prime;
  j["R"] = ev.R;
  j["S"] = ev.S;
  j["E"] = ev.E;
  j["stepped_down"] = ev.stepped_down;
  if (ev.p3_prep) j["p3_prep"] = *ev.p3_prep;
  if (ev.p3_det) j["p3_det"] = *ev.p3_det;
  j["p3_veto"] = ev.p3_veto;
  auto& qs = j["queries"] = nlohmann::json::array();
  for (const auto& q : ev.queries)
    qs.push_back({{"purpose", std::string(to_string(q.purpose))},
                  {"query", q.query},
                  {"count", q.count},
                  {"snippets", q.snippets},
                  {"backend", q.backend}});
  return j;
}

nlohmann::json reading_json(const ReadingResult& rr) {
  const Reading& r = rr.reading;
  const DepTree& dep = r.dep();
  nlohmann::json j;
  j["matrix_verb"] = r.matrix_verb;
  j["matrix_verb_form"] = r.matrix_verb_form();
  j["matrix_verb_tag"] = r.matrix_verb_tag();
  j["virtual_copula"] = r.virtual_copula;
  j["matrix_object"] = opt_index(r.matrix_object);
  j["subordinate_clause"] = opt_index(r.subordinate_clause);
  if (r.matrix_object) j["matrix_object_word"] = dep[*r.matrix_object].token;
  if (r.subordinate_clause) j["subordinate_clause_word"] = dep[*r.subordinate_clause].token;
  j["verdict"] = std::string(to_string(rr.verdict.kind));
  if (rr.verdict.cleft_cue) {
    j["cleft_cue"] = cue_number(*rr.verdict.cleft_cue);
    j["cleft_cue_name"] = std::string(to_string(*rr.verdict.cleft_cue));
  }
  if (rr.verdict.rejected != RejectReason::None) j["rejected"] = std::string(to_string(rr.verdict.rejected));
  if (const auto& c = rr.verdict.candidate) {
    j["candidate"] = {{"matrix_kind", std::string(to_string(c->matrix_kind))},
                      {"predicate", opt_index(c->predicate)},
                      {"clause_head", c->clause.head},
                      {"clause_form", std::string(to_string(c->clause.form))},
                      {"s_flag", c->s_flag}};
  }
  if (rr.evidence) j["evidence"] = evidence_json(*rr.evidence);
  return j;
}

}  // namespace

nlohmann::json to_record(const SentenceVerdict& v, const std::string& system, const DecisionConstants* constants) {
  nlohmann::json j;
  j["sentence_id"] = v.sentence_id;
  j["token_index"] = v.token_index;
  j["label"] = std::string(to_string(v.label));
  j["system"] = system;
  j["role"] = std::string(to_string(v.role));
  if (constants)
    j["constants"] = {{"n_min", constants->n_min},
                      {"r_exp", constants->r_exp},
                      {"r_scarce", constants->r_scarce},
                      {"r_zero", constants->r_zero}};
  auto& rs = j["readings"] = nlohmann::json::array();
  for (const auto& r : v.readings) rs.push_back(reading_json(r));
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace pleo
