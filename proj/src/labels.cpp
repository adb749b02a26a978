#include "pleo/labels.hpp"

#include "pleo/data.hpp"

namespace pleo {

std::string_view to_string(ItLabel label) {
  switch (label) {
    case ItLabel::Nominal: return "nominal";
    case ItLabel::Clause: return "clause";
    case ItLabel::Extraposition: return "extraposition";
    case ItLabel::Cleft: return "cleft";
    case ItLabel::WeatherTime: return "weather_time";
    case ItLabel::Idiom: return "idiom";
    case ItLabel::Other: return "other";
  }
  return "other";
}

std::optional<ItLabel> parse_label(std::string_view text) {
  std::string t = to_lower(trim(text));
  if (t == "nominal" || t == "referential") return ItLabel::Nominal;
  if (t == "clause") return ItLabel::Clause;
  if (t == "extraposition") return ItLabel::Extraposition;
  if (t == "cleft") return ItLabel::Cleft;
  if (t == "weather_time" || t == "weather-time" || t == "weather/time") return ItLabel::WeatherTime;
  if (t == "idiom") return ItLabel::Idiom;
  if (t == "other") return ItLabel::Other;
  return std::nullopt;
}

}  // namespace pleo
