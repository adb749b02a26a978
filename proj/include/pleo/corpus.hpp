#ifndef PLEO_CORPUS_HPP
#define PLEO_CORPUS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pleo/query.hpp"

namespace pleo {

struct HitResult {
  std::uint64_t count = 0;            // matching sentences
  std::vector<std::string> snippets;  // first batch, at most min(batch, count)

  bool operator==(const HitResult&) const = default;
};

struct BackendCapabilities {
  bool supports_alternation = true;
  std::size_t snippet_batch = 10;
  bool exact_counts = true;
};

class FixtureMiss : public std::runtime_error {
 public:
  explicit FixtureMiss(std::string query);
  const std::string& query() const { return query_; }

 private:
  std::string query_;
};

class Backend {
 public:
  virtual ~Backend() = default;
  // Count plus the first capabilities().snippet_batch snippets.
  virtual HitResult count(const Query& q) const = 0;
  virtual BackendCapabilities capabilities() const = 0;
  virtual std::string name() const = 0;

  // Up to k snippets; k must not exceed the snippet batch.
  std::vector<std::string> snippets(const Query& q, std::size_t k) const;
};

// Word tokens used for matching: lowercased, punctuation-only tokens dropped.
std::vector<std::string> match_tokens(std::string_view sentence);

// Phrase search over a sentence collection.  Counting uses a positional
// inverted index; the result equals a full scan of every sentence.
class LocalIndex : public Backend {
 public:
  explicit LocalIndex(std::vector<std::string> sentences, std::size_t snippet_batch = 10);
  // One tokenized sentence per line.
  static LocalIndex from_corpus_file(const std::string& path, std::size_t snippet_batch = 10);

  // Index files are a header line followed by the sentences.
  void save(const std::string& path) const;
  static LocalIndex load(const std::string& path, std::size_t snippet_batch = 10);

  HitResult count(const Query& q) const override;
  BackendCapabilities capabilities() const override;
  std::string name() const override { return "local-index"; }

  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }
  const std::vector<std::string>& sentences() const { return sentences_; }

 private:
  struct Posting {
    std::uint32_t sentence;
    std::uint32_t position;
  };
  bool matches_at(std::uint32_t sentence, std::uint32_t pos,
                  const std::vector<std::vector<std::uint32_t>>& slot_ids) const;

  std::vector<std::string> sentences_;
  std::vector<std::vector<std::uint32_t>> words_;
  std::unordered_map<std::string, std::uint32_t> vocab_;
  std::vector<std::vector<Posting>> postings_;
  std::size_t batch_;
};

// Recorded query results, keyed by canonical query text.
//   Q<TAB>query<TAB>count
//   S<TAB>query<TAB>snippet
class FixtureStore : public Backend {
 public:
  FixtureStore() = default;
  FixtureStore(std::map<std::string, HitResult> entries, bool strict);
  static FixtureStore parse(std::string_view text, bool strict);
  static FixtureStore load(const std::string& path, bool strict);

  void put(const Query& q, HitResult r);
  std::string dump() const;
  void save(const std::string& path) const;

  HitResult count(const Query& q) const override;
  BackendCapabilities capabilities() const override { return caps_; }
  std::string name() const override { return "fixture"; }

  bool strict() const { return strict_; }
  const std::map<std::string, HitResult>& entries() const { return entries_; }
  void set_capabilities(BackendCapabilities c) { caps_ = c; }

 private:
  std::map<std::string, HitResult> entries_;
  bool strict_ = false;
  BackendCapabilities caps_;
};

// Write-through cache in fixture format in front of another backend.
class CachingBackend : public Backend {
 public:
  CachingBackend(std::shared_ptr<const Backend> inner, std::string cache_path);

  HitResult count(const Query& q) const override;
  BackendCapabilities capabilities() const override { return inner_->capabilities(); }
  std::string name() const override { return inner_->name() + "+cache"; }
  bool was_cached(const Query& q) const;

 private:
  std::shared_ptr<const Backend> inner_;
  std::string path_;
  mutable std::mutex mu_;
  mutable std::map<std::string, HitResult> cache_;
  std::map<std::string, HitResult> preloaded_;
};

// Multiplies counts by a seeded, per-query factor in [1 - jitter, 1 + jitter].
// For robustness experiments only.
class NoisyBackend : public Backend {
 public:
  NoisyBackend(std::shared_ptr<const Backend> inner, std::uint64_t seed, double jitter);
  HitResult count(const Query& q) const override;
  BackendCapabilities capabilities() const override;
  std::string name() const override { return inner_->name() + "+noise"; }

 private:
  std::shared_ptr<const Backend> inner_;
  std::uint64_t seed_;
  double jitter_;
};

// Runs each single-word combination of an alternation query on a backend
// without alternation support and sums the counts.
class ExplodingBackend : public Backend {
 public:
  explicit ExplodingBackend(std::shared_ptr<const Backend> inner);
  HitResult count(const Query& q) const override;
  BackendCapabilities capabilities() const override;
  std::string name() const override { return inner_->name() + "+explode"; }

 private:
  std::shared_ptr<const Backend> inner_;
};

// Fraction of snippets in which the Pattern I word sequence starts a
// sentence as "What ...".  Zero when there are no snippets.
double validate_what_cleft(const std::vector<std::string>& snippets, const Query& pattern_one);

}  // namespace pleo

#endif
