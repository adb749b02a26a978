#ifndef PLEO_LEXICON_HPP
#define PLEO_LEXICON_HPP

#include <set>
#include <string>
#include <string_view>

namespace pleo {

using WordSet = std::set<std::string, std::less<>>;

// One lowercased word per line, '#' comments allowed.
WordSet parse_word_list(std::string_view text);
WordSet load_word_list(const std::string& path);
// A list compiled in from data/<name>.
WordSet builtin_word_list(std::string_view name);

struct WeatherTimeLexicon {
  WordSet weather_heads;
  WordSet time_heads;
  WordSet weather_verbs;

  static WeatherTimeLexicon builtin();
  // Reads weather_heads.txt, time_heads.txt and weather_verbs.txt from `dir`.
  static WeatherTimeLexicon from_directory(const std::string& dir);
};

}  // namespace pleo

#endif
