#include "pleo/lexicon.hpp"

#include <stdexcept>

#include "pleo/data.hpp"

namespace pleo {

WordSet parse_word_list(std::string_view text) {
  WordSet out;
  for (const auto& line : data_lines(text)) out.insert(to_lower(line));
  return out;
}

WordSet load_word_list(const std::string& path) { return parse_word_list(read_file(path)); }

WordSet builtin_word_list(std::string_view name) {
  return parse_word_list(embedded_data(std::string(name) + ".txt"));
}

namespace {

void require_nonempty(const WeatherTimeLexicon& lex) {
  if (lex.weather_heads.empty() || lex.time_heads.empty() || lex.weather_verbs.empty())
    throw std::runtime_error("weather/time lexicon: every word list must be non-empty");
}

}  // namespace

WeatherTimeLexicon WeatherTimeLexicon::builtin() {
  WeatherTimeLexicon lex{builtin_word_list("weather_heads"), builtin_word_list("time_heads"),
                         builtin_word_list("weather_verbs")};
  require_nonempty(lex);
  return lex;
}

WeatherTimeLexicon WeatherTimeLexicon::from_directory(const std::string& dir) {
  WeatherTimeLexicon lex{load_word_list(dir + "/weather_heads.txt"),
                         load_word_list(dir + "/time_heads.txt"),
                         load_word_list(dir + "/weather_verbs.txt")};
  require_nonempty(lex);
  return lex;
}

}  // namespace pleo
