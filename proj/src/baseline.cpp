#include "pleo/baseline.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleo/data.hpp"

namespace pleo {

PHAConfig PHAConfig::parse(std::string_view text) {
  PHAConfig cfg;
  for (const auto& line : data_lines(text)) {
    auto f = split_ws(line);
    const std::string& key = f[0];
    if (key == "max_length") {
      if (f.size() != 2) throw std::runtime_error("max_length takes one value");
      cfg.max_construct_length = std::stoul(f[1]);
      continue;
    }
    WordSet* target = nullptr;
    if (key == "markers") target = &cfg.markers;
    else if (key == "task_status") target = &cfg.task_status_words;
    else if (key == "cognitive") target = &cfg.cognitive_words;
    else if (key == "be_forms") target = &cfg.be_forms;
    else if (key == "forbidden") target = &cfg.forbidden_punctuation;
    else if (key == "idioms") target = &cfg.idioms;
    else throw std::runtime_error("unknown baseline config key '" + key + "'");
    for (std::size_t i = 1; i < f.size(); ++i) target->insert(key == "forbidden" ? f[i] : to_lower(f[i]));
  }
  if (cfg.markers.empty() || cfg.task_status_words.empty() || cfg.be_forms.empty())
    throw std::runtime_error("baseline config needs markers, task_status and be_forms");
  return cfg;
}

PHAConfig PHAConfig::from_file(const std::string& path) { return parse(read_file(path)); }

const PHAConfig& PHAConfig::builtin() {
  static const PHAConfig cfg = parse(embedded_data("pha.txt"));
  return cfg;
}

std::optional<PHAMatch> pha_match(const std::vector<std::string>& tokens, std::size_t it_index,
                                  const PHAConfig& cfg) {
  if (it_index >= tokens.size() || to_lower(tokens[it_index]) != "it") return std::nullopt;
  if (it_index + 2 < tokens.size() && cfg.idioms.count(to_lower(tokens[it_index + 1])) &&
      to_lower(tokens[it_index + 2]) == "to")
    return std::nullopt;

  const std::size_t end = std::min(tokens.size(), it_index + 1 + cfg.max_construct_length);
  std::size_t commas = 0;
  bool status = false, cognitive = false, be = false;
  for (std::size_t j = it_index + 1; j < end; ++j) {
    const std::string w = to_lower(tokens[j]);
    if (cfg.forbidden_punctuation.count(tokens[j])) return std::nullopt;
    if (cfg.markers.count(w)) {
      if (commas == 1) return std::nullopt;
      bool ok = false;
      if (w == "to")
        ok = status;
      else if (w == "that" || w == "whether")
        ok = status || cognitive;
      else if (w == "who" || w == "whom")
        ok = be;
      if (!ok) return std::nullopt;
      return PHAMatch{w, j};
    }
    if (tokens[j] == ",") ++commas;
    if (cfg.task_status_words.count(w)) status = true;
    if (cfg.cognitive_words.count(w)) cognitive = true;
    if (cfg.be_forms.count(w)) be = true;
  }
  return std::nullopt;
}

bool pha_classify(const std::vector<std::string>& tokens, std::size_t it_index, const PHAConfig& cfg) {
  return pha_match(tokens, it_index, cfg).has_value();
}

ItLabel pha_label(const std::vector<std::string>& tokens, std::size_t it_index, const PHAConfig& cfg) {
  auto m = pha_match(tokens, it_index, cfg);
  if (!m) return ItLabel::Nominal;
  return (m->marker == "who" || m->marker == "whom") ? ItLabel::Cleft : ItLabel::Extraposition;
}

}  // namespace pleo
