#ifndef PLEO_BASELINE_HPP
#define PLEO_BASELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pleo/labels.hpp"
#include "pleo/lexicon.hpp"

namespace pleo {

// Bracketing-pattern detector working on raw tokens: "it ... to",
// "it ... that", "it ... whether", "it ... who".
struct PHAConfig {
  std::size_t max_construct_length = 25;
  WordSet markers;
  WordSet task_status_words;
  WordSet cognitive_words;
  WordSet be_forms;
  WordSet forbidden_punctuation;
  WordSet idioms;  // "it remains to"

  static PHAConfig parse(std::string_view text);
  static PHAConfig from_file(const std::string& path);
  static const PHAConfig& builtin();
};

struct PHAMatch {
  std::string marker;
  std::size_t marker_index = 0;
};

// The matching pattern, if any.
std::optional<PHAMatch> pha_match(const std::vector<std::string>& tokens, std::size_t it_index,
                                  const PHAConfig& cfg = PHAConfig::builtin());

bool pha_classify(const std::vector<std::string>& tokens, std::size_t it_index,
                  const PHAConfig& cfg = PHAConfig::builtin());

// Cleft for the "who" pattern, extraposition otherwise, nominal when no match.
ItLabel pha_label(const std::vector<std::string>& tokens, std::size_t it_index,
                  const PHAConfig& cfg = PHAConfig::builtin());

}  // namespace pleo

#endif
