#ifndef PLEO_PIPELINE_HPP
#define PLEO_PIPELINE_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pleo/baseline.hpp"
#include "pleo/corpus.hpp"
#include "pleo/decision.hpp"
#include "pleo/filters.hpp"
#include "pleo/querygen.hpp"

namespace pleo {

struct TreebankSentence {
  std::string id;
  std::size_t line = 0;
  ParseTree tree;
  DepTreePtr dep;
  std::vector<std::string> tokens;
};

// Sidecar id map: line_number<TAB>sentence_id, keyed by the line a tree starts on.
std::map<std::size_t, std::string> parse_id_map(std::string_view text, const std::string& source = "ids");

// Ids default to <source>:<line>.
std::vector<TreebankSentence> load_treebank(std::string_view text, const std::string& source,
                                            const std::map<std::size_t, std::string>& ids = {});
std::vector<TreebankSentence> read_treebank(const std::string& path, const std::optional<std::string>& ids_path = {});

struct ClassifierConfig {
  FilterConfig filters;
  DecisionConstants constants;
  bool pattern3 = false;  // issue Pattern III queries and apply the veto
  double pattern3_ratio = 2.0;
  StubSet stubs = StubSet::builtin();
};

class Classifier {
 public:
  Classifier(ClassifierConfig cfg, std::shared_ptr<const Backend> backend);

  // One verdict per "it" in token order.
  std::vector<SentenceVerdict> classify(const TreebankSentence& s) const;
  // Sentences fan out over `threads` workers; results keep input order.
  std::vector<SentenceVerdict> classify_all(const std::vector<TreebankSentence>& sentences, unsigned threads = 1) const;

  const ClassifierConfig& config() const { return cfg_; }

 private:
  ReadingResult classify_reading_of(const Reading& r) const;

  ClassifierConfig cfg_;
  std::shared_ptr<const Backend> backend_;
};

std::vector<SentenceVerdict> pha_classify_all(const std::vector<TreebankSentence>& sentences,
                                              const PHAConfig& cfg = PHAConfig::builtin());

// Output record for one instance.  `constants` is omitted for the baseline.
nlohmann::json to_record(const SentenceVerdict& v, const std::string& system,
                         const DecisionConstants* constants = nullptr);

}  // namespace pleo

#endif
