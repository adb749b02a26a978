#include "pleo/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>

#include "pleo/data.hpp"
#include "pleo/rng.hpp"

namespace pleo {

FixtureMiss::FixtureMiss(std::string query)
    : std::runtime_error("fixture has no entry for query \"" + query + "\""), query_(std::move(query)) {}

std::vector<std::string> Backend::snippets(const Query& q, std::size_t k) const {
  if (k > capabilities().snippet_batch)
    throw std::invalid_argument("snippet request exceeds the backend batch size");
  auto s = count(q).snippets;
  if (s.size() > k) s.resize(k);
  return s;
}

namespace {

bool is_word_token(std::string_view tok) {
  return std::any_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isalnum(c) || c >= 0x80; });
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::string_view kIndexHeader = "pleo-index 1";

}  // namespace

std::vector<std::string> match_tokens(std::string_view sentence) {
  std::vector<std::string> out;
  for (auto& t : split_ws(sentence))
    if (is_word_token(t)) out.push_back(to_lower(t));
  return out;
}

// ---------------------------------------------------------------- LocalIndex

LocalIndex::LocalIndex(std::vector<std::string> sentences, std::size_t snippet_batch)
    : sentences_(std::move(sentences)), batch_(snippet_batch) {
  if (batch_ == 0) throw std::invalid_argument("snippet batch must be at least 1");
  words_.reserve(sentences_.size());
  for (std::uint32_t s = 0; s < sentences_.size(); ++s) {
    std::vector<std::uint32_t> ids;
    for (auto& w : match_tokens(sentences_[s])) {
      auto [it, inserted] = vocab_.try_emplace(w, static_cast<std::uint32_t>(vocab_.size()));
      if (inserted) postings_.emplace_back();
      postings_[it->second].push_back({s, static_cast<std::uint32_t>(ids.size())});
      ids.push_back(it->second);
    }
    words_.push_back(std::move(ids));
  }
}

LocalIndex LocalIndex::from_corpus_file(const std::string& path, std::size_t snippet_batch) {
  std::vector<std::string> lines;
  for (auto& l : split(read_file(path), '\n')) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    if (!trim(l).empty()) lines.push_back(l);
  }
  return LocalIndex(std::move(lines), snippet_batch);
}

void LocalIndex::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write index file " + path);
  out << kIndexHeader << '\n';
  for (const auto& s : sentences_) out << s << '\n';
  if (!out) throw std::runtime_error("error writing index file " + path);
}

LocalIndex LocalIndex::load(const std::string& path, std::size_t snippet_batch) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("index file " + path + " not found; build it with 'pleo corpus build'");
  std::string line;
  if (!std::getline(in, line) || line != kIndexHeader)
    throw std::runtime_error(path + " is not a pleo index file");
  std::vector<std::string> sentences;
  while (std::getline(in, line)) sentences.push_back(line);
  return LocalIndex(std::move(sentences), snippet_batch);
}

bool LocalIndex::matches_at(std::uint32_t sentence, std::uint32_t pos,
                            const std::vector<std::vector<std::uint32_t>>& slot_ids) const {
  const auto& w = words_[sentence];
  if (pos + slot_ids.size() > w.size()) return false;
  for (std::size_t k = 1; k < slot_ids.size(); ++k) {
    const auto& ids = slot_ids[k];
    if (std::find(ids.begin(), ids.end(), w[pos + k]) == ids.end()) return false;
  }
  return true;
}

HitResult LocalIndex::count(const Query& q) const {
  HitResult r;
  if (q.slots.empty()) return r;
  std::vector<std::vector<std::uint32_t>> slot_ids;
  for (const auto& s : q.slots) {
    std::vector<std::uint32_t> ids;
    for (const auto& w : s.words)
      if (auto it = vocab_.find(to_lower(w)); it != vocab_.end()) ids.push_back(it->second);
    if (ids.empty()) return r;  // a slot no sentence can satisfy
    slot_ids.push_back(std::move(ids));
  }
  // start positions from the first slot's postings, grouped by sentence
  std::vector<Posting> starts;
  for (auto id : slot_ids[0]) starts.insert(starts.end(), postings_[id].begin(), postings_[id].end());
  std::sort(starts.begin(), starts.end(), [](const Posting& a, const Posting& b) {
    return a.sentence != b.sentence ? a.sentence < b.sentence : a.position < b.position;
  });
  std::uint32_t last = UINT32_MAX;
  for (const auto& p : starts) {
    if (p.sentence == last) continue;
    if (matches_at(p.sentence, p.position, slot_ids)) {
      last = p.sentence;
      ++r.count;
      if (r.snippets.size() < batch_) r.snippets.push_back(sentences_[p.sentence]);
    }
  }
  return r;
}

BackendCapabilities LocalIndex::capabilities() const { return {true, batch_, true}; }

// -------------------------------------------------------------- FixtureStore

FixtureStore::FixtureStore(std::map<std::string, HitResult> entries, bool strict)
    : entries_(std::move(entries)), strict_(strict) {}

FixtureStore FixtureStore::parse(std::string_view text, bool strict) {
  FixtureStore store({}, strict);
  std::size_t lineno = 0;
  for (auto line : split(text, '\n')) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 3 || (fields[0] != "Q" && fields[0] != "S"))
      throw std::runtime_error("fixture line " + std::to_string(lineno) + ": expected Q or S record with 3 fields");
    const std::string key = Query::parse(fields[1]).serialize();
    auto& entry = store.entries_[key];
    if (fields[0] == "Q") {
      try {
        std::size_t used = 0;
        entry.count = std::stoull(fields[2], &used);
        if (used != fields[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::runtime_error("fixture line " + std::to_string(lineno) + ": bad count '" + fields[2] + "'");
      }
    } else {
      std::string snippet = fields[2];
      for (std::size_t k = 3; k < fields.size(); ++k) snippet += '\t' + fields[k];
      entry.snippets.push_back(std::move(snippet));
    }
  }
  return store;
}

FixtureStore FixtureStore::load(const std::string& path, bool strict) { return parse(read_file(path), strict); }

void FixtureStore::put(const Query& q, HitResult r) { entries_[q.serialize()] = std::move(r); }

std::string FixtureStore::dump() const {
  std::string out;
  for (const auto& [q, r] : entries_) {
    out += "Q\t" + q + '\t' + std::to_string(r.count) + '\n';
    for (const auto& s : r.snippets) out += "S\t" + q + '\t' + s + '\n';
  }
  return out;
}

void FixtureStore::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write fixture file " + path);
  out << dump();
}

HitResult FixtureStore::count(const Query& q) const {
  const std::string key = q.serialize();
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (strict_) throw FixtureMiss(key);
    return {};
  }
  HitResult r = it->second;
  if (r.snippets.size() > caps_.snippet_batch) r.snippets.resize(caps_.snippet_batch);
  return r;
}

// ------------------------------------------------------------ CachingBackend

CachingBackend::CachingBackend(std::shared_ptr<const Backend> inner, std::string cache_path)
    : inner_(std::move(inner)), path_(std::move(cache_path)) {
  std::ifstream probe(path_);
  if (probe) preloaded_ = FixtureStore::load(path_, false).entries();
  cache_ = preloaded_;
}

bool CachingBackend::was_cached(const Query& q) const { return preloaded_.count(q.serialize()) > 0; }

HitResult CachingBackend::count(const Query& q) const {
  const std::string key = q.serialize();
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  HitResult r = inner_->count(q);
  std::lock_guard<std::mutex> lock(mu_);
  if (cache_.emplace(key, r).second) {
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot append to cache file " + path_);
    out << "Q\t" << key << '\t' << r.count << '\n';
    for (const auto& s : r.snippets) out << "S\t" << key << '\t' << s << '\n';
  }
  return r;
}

// -------------------------------------------------------------- NoisyBackend

NoisyBackend::NoisyBackend(std::shared_ptr<const Backend> inner, std::uint64_t seed, double jitter)
    : inner_(std::move(inner)), seed_(seed), jitter_(jitter) {
  if (jitter < 0.0 || jitter >= 1.0) throw std::invalid_argument("jitter must be in [0, 1)");
}

HitResult NoisyBackend::count(const Query& q) const {
  HitResult r = inner_->count(q);
  Rng rng(substream_seed(seed_, fnv1a(q.serialize())));
  const double factor = 1.0 + jitter_ * (2.0 * rng.uniform() - 1.0);
  r.count = static_cast<std::uint64_t>(static_cast<double>(r.count) * factor + 0.5);
  if (r.count == 0) r.snippets.clear();
  if (r.snippets.size() > r.count) r.snippets.resize(r.count);
  return r;
}

BackendCapabilities NoisyBackend::capabilities() const {
  auto c = inner_->capabilities();
  c.exact_counts = false;
  return c;
}

// ---------------------------------------------------------- ExplodingBackend

ExplodingBackend::ExplodingBackend(std::shared_ptr<const Backend> inner) : inner_(std::move(inner)) {}

HitResult ExplodingBackend::count(const Query& q) const {
  HitResult total;
  const std::size_t batch = inner_->capabilities().snippet_batch;
  for (const auto& single : q.explode()) {
    HitResult r = inner_->count(single);
    total.count += r.count;
    for (auto& s : r.snippets)
      if (total.snippets.size() < batch) total.snippets.push_back(std::move(s));
  }
  return total;
}

BackendCapabilities ExplodingBackend::capabilities() const {
  auto c = inner_->capabilities();
  c.supports_alternation = true;
  return c;
}

// --------------------------------------------------------------- validation

namespace {

std::string regex_escape(std::string_view w) {
  static const std::string special = R"(\^$.|?*+()[]{}/-)";
  std::string out;
  for (char c : w) {
    if (special.find(c) != std::string::npos) out += '\\';
    if (c == '\'') {
      out += "(?:'|\xE2\x80\x99)";
      continue;
    }
    out += c;
  }
  return out;
}

std::string what_cleft_pattern(const Query& q) {
  std::string re = R"((?:^[\s"'`(\[]*|[.!?]["')\]]*\s+["'`(\[]*)What)";
  for (std::size_t i = 1; i < q.slots.size(); ++i) {
    re += "(?:";
    const auto& words = q.slots[i].words;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (k) re += '|';
      re += words[k].front() == '\'' ? R"(\s*)" : R"(\s+)";
      re += regex_escape(words[k]);
    }
    re += ')';
  }
  re += R"((?=\W|$))";
  return re;
}

}  // namespace

double validate_what_cleft(const std::vector<std::string>& snippets, const Query& pattern_one) {
  if (snippets.empty() || pattern_one.slots.empty()) return 0.0;
  const std::regex re(what_cleft_pattern(pattern_one), std::regex::ECMAScript);
  std::size_t valid = 0;
  for (const auto& s : snippets)
    if (std::regex_search(s, re)) ++valid;
  return static_cast<double>(valid) / static_cast<double>(snippets.size());
}

}  // namespace pleo
