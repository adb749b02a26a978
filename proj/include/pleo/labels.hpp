#ifndef PLEO_LABELS_HPP
#define PLEO_LABELS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace pleo {

// Usage categories for an instance of "it".
enum class ItLabel { Nominal, Clause, Extraposition, Cleft, WeatherTime, Idiom, Other };

std::string_view to_string(ItLabel label);
// Accepts the canonical names plus "weather-time", "referential" (-> Nominal)
// and is case-insensitive.
std::optional<ItLabel> parse_label(std::string_view text);

inline bool is_pleonastic(ItLabel l) {
  return l == ItLabel::Extraposition || l == ItLabel::Cleft || l == ItLabel::WeatherTime;
}

}  // namespace pleo

#endif
