#include "pleo/query.hpp"

#include <algorithm>

#include "pleo/data.hpp"

namespace pleo {

std::string_view to_string(QueryPurpose p) {
  switch (p) {
    case QueryPurpose::PatternI: return "I";
    case QueryPurpose::PatternII_it: return "II_it";
    case QueryPurpose::PatternII_others: return "II_others";
    case QueryPurpose::PatternIIp_it: return "II'_it";
    case QueryPurpose::PatternIIp_others: return "II'_others";
    case QueryPurpose::ObjectIt: return "object_it";
    case QueryPurpose::ObjectThem: return "object_them";
    case QueryPurpose::P3_compound: return "p3_compound";
    case QueryPurpose::P3_gerund_prep: return "p3_gerund_prep";
    case QueryPurpose::P3_gerund_det: return "p3_gerund_det";
  }
  return "?";
}

Slot::Slot(std::string word) { words.push_back(to_lower(word)); }

Slot::Slot(std::vector<std::string> alternatives) {
  for (auto& w : alternatives) {
    std::string l = to_lower(w);
    if (std::find(words.begin(), words.end(), l) == words.end()) words.push_back(std::move(l));
  }
}

std::string Query::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ' ';
    for (std::size_t k = 0; k < slots[i].words.size(); ++k) {
      if (k) out += '|';
      out += slots[i].words[k];
    }
  }
  return out;
}

void Query::validate() const {
  if (slots.size() < 2) throw InvalidQuery("query needs at least two positions: '" + serialize() + "'");
  for (const auto& s : slots) {
    if (s.words.empty()) throw InvalidQuery("empty slot in query '" + serialize() + "'");
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      const auto& w = s.words[i];
      if (w.empty() || w.find_first_of(" \t|") != std::string::npos)
        throw InvalidQuery("malformed word in query '" + serialize() + "'");
      if (std::find(s.words.begin(), s.words.begin() + static_cast<long>(i), w) != s.words.begin() + static_cast<long>(i))
        throw InvalidQuery("duplicate alternative '" + w + "'");
    }
  }
}

Query Query::parse(std::string_view text, QueryPurpose purpose) {
  Query q;
  q.purpose = purpose;
  for (const auto& tok : split_ws(text)) {
    Slot s;
    for (const auto& w : split(tok, '|')) {
      if (w.empty()) throw InvalidQuery("empty alternative in '" + std::string(text) + "'");
      std::string l = to_lower(w);
      if (std::find(s.words.begin(), s.words.end(), l) != s.words.end())
        throw InvalidQuery("duplicate alternative '" + l + "' in '" + std::string(text) + "'");
      s.words.push_back(std::move(l));
    }
    q.slots.push_back(std::move(s));
  }
  q.validate();
  return q;
}

std::vector<Query> Query::explode() const {
  std::vector<Query> out{Query{{}, purpose, quoted}};
  for (const auto& s : slots) {
    std::vector<Query> next;
    next.reserve(out.size() * s.words.size());
    for (const auto& partial : out)
      for (const auto& w : s.words) {
        Query q = partial;
        q.slots.emplace_back(w);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace pleo
