#include "pleo/morphology.hpp"

#include <array>
#include <stdexcept>

#include "pleo/data.hpp"

namespace pleo {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view s, std::string_view suf) {
  return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

int syllables(std::string_view w) {
  int groups = 0;
  bool in_vowel = false;
  for (char c : w) {
    bool v = is_vowel(c) || c == 'y';
    if (v && !in_vowel) ++groups;
    in_vowel = v;
  }
  return groups;
}

// consonant-vowel-consonant ending, final consonant not w/x/y
bool cvc(std::string_view w) {
  if (w.size() < 3) return false;
  char a = w[w.size() - 3], b = w[w.size() - 2], c = w[w.size() - 1];
  return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' && c != 'y';
}

}  // namespace

bool is_be_form(std::string_view w) {
  static const std::array<std::string_view, 11> forms = {
      "be", "am", "is", "are", "was", "were", "been", "being", "'s", "'re", "'m"};
  for (auto f : forms)
    if (w == f) return true;
  return false;
}

bool is_have_form(std::string_view w) {
  return w == "have" || w == "has" || w == "had" || w == "having" || w == "'ve" || w == "'d";
}

Morphology Morphology::parse(std::string_view irregular, std::string_view doubling) {
  Morphology m;
  for (const auto& line : data_lines(irregular)) {
    auto f = split_ws(line);
    if (f.size() < 3) throw std::runtime_error("irregular verb table: short line: " + line);
    Forms forms{f[1], f[2], f.size() > 3 ? f[3] : std::string()};
    m.inflected_to_lemma_.emplace(f[1], f[0]);
    m.inflected_to_lemma_.emplace(f[2], f[0]);
    if (!forms.third.empty()) m.inflected_to_lemma_.emplace(forms.third, f[0]);
    m.forms_[f[0]] = std::move(forms);
  }
  for (const auto& line : data_lines(doubling)) m.doubling_.insert(to_lower(line));
  return m;
}

const Morphology& Morphology::builtin() {
  static const Morphology m =
      parse(embedded_data("irregular_verbs.txt"), embedded_data("verb_doubling.txt"));
  return m;
}

bool Morphology::doubles(std::string_view lemma) const {
  if (doubling_.count(lemma)) return true;
  return syllables(lemma) == 1 && cvc(lemma);
}

// Undo suffix stripping: drop a doubled consonant or restore a silent e.
std::string Morphology::restore_stem(std::string stem) const {
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2]) {
    std::string_view dbl = "bgmnprt";
    if (dbl.find(stem[n - 1]) != std::string_view::npos) return stem.substr(0, n - 1);
    return stem;
  }
  if (n >= 2) {
    char last = stem[n - 1], prev = stem[n - 2];
    if (last == 'v' || last == 'c' || last == 'u' || ends_with(stem, "dg") ||
        ends_with(stem, "us") || ends_with(stem, "rg") || (ends_with(stem, "ng") && n <= 4))
      return stem + "e";
    if (last == 'l' && !is_vowel(prev) && prev != 'l' && prev != 'r') return stem + "e";
    if ((ends_with(stem, "iz") || ends_with(stem, "ys")) && n > 3) return stem + "e";
    // single a/i/o/u vowel before a final consonant: create -> creat+e
    if (n >= 3 && cvc(stem) && prev != 'e') {
      std::string_view finals = "tdrszkmnpbgf";
      if (finals.find(last) != std::string_view::npos) return stem + "e";
    }
  }
  return stem;
}

std::string Morphology::verb_lemma(std::string_view word, std::string_view tag) const {
  std::string w = to_lower(word);
  if (is_be_form(w) && !(w == "'s" && tag != "VBZ")) return "be";
  if (w == "'ve" || w == "has" || w == "had" || w == "having") return "have";
  if (w == "ca") return "can";
  if (w == "wo") return "will";
  if (w == "'ll") return "will";
  if (w == "'d") return "would";
  if (forms_.count(w)) return w;
  if (auto it = inflected_to_lemma_.find(w); it != inflected_to_lemma_.end()) return it->second;
  if (tag == "VBZ") {
    if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "ies")) return w.substr(0, w.size() - 1);
    for (std::string_view suf : {"sses", "shes", "ches", "xes", "zes", "oes"})
      if (ends_with(w, suf)) return w.substr(0, w.size() - 2);
    if (ends_with(w, "s") && !ends_with(w, "ss")) return w.substr(0, w.size() - 1);
    return w;
  }
  if (tag == "VBD" || tag == "VBN") {
    if (ends_with(w, "ied")) return w.size() > 4 ? w.substr(0, w.size() - 3) + "y" : w.substr(0, w.size() - 1);
    if (ends_with(w, "eed") && !ends_with(w, "eeded")) return w.substr(0, w.size() - 1);
    if (ends_with(w, "yed")) return w.substr(0, w.size() - 2);
    if (ends_with(w, "ed") && w.size() > 3) {
      std::string stem = w.substr(0, w.size() - 2);
      if (forms_.count(stem)) return stem;
      if (forms_.count(stem + "e")) return stem + "e";
      return restore_stem(stem);
    }
    return w;
  }
  if (tag == "VBG") {
    if (ends_with(w, "ying") && w.size() <= 5) return w.substr(0, w.size() - 4) + "ie";
    if (ends_with(w, "eeing") || ends_with(w, "oeing")) return w.substr(0, w.size() - 3);
    if (ends_with(w, "ing") && w.size() > 4) {
      std::string stem = w.substr(0, w.size() - 3);
      if (forms_.count(stem)) return stem;
      if (forms_.count(stem + "e")) return stem + "e";
      return restore_stem(stem);
    }
    return w;
  }
  return w;
}

std::string Morphology::third_singular(std::string_view lemma) const {
  std::string l = to_lower(lemma);
  if (auto it = forms_.find(l); it != forms_.end() && !it->second.third.empty())
    return it->second.third;
  if (l.size() >= 2 && l.back() == 'y' && !is_vowel(l[l.size() - 2]))
    return l.substr(0, l.size() - 1) + "ies";
  for (std::string_view suf : {"s", "x", "z", "ch", "sh", "o"})
    if (ends_with(l, suf)) return l + "es";
  return l + "s";
}

std::string Morphology::past(std::string_view lemma) const {
  std::string l = to_lower(lemma);
  if (auto it = forms_.find(l); it != forms_.end()) return it->second.past;
  if (ends_with(l, "e")) return l + "d";
  if (l.size() >= 2 && l.back() == 'y' && !is_vowel(l[l.size() - 2]))
    return l.substr(0, l.size() - 1) + "ied";
  if (doubles(l)) return l + l.back() + "ed";
  return l + "ed";
}

std::string Morphology::past_participle(std::string_view lemma) const {
  std::string l = to_lower(lemma);
  if (auto it = forms_.find(l); it != forms_.end()) return it->second.participle;
  return past(l);
}

std::string Morphology::gerund(std::string_view lemma) const {
  std::string l = to_lower(lemma);
  if (l == "be") return "being";
  if (ends_with(l, "ie")) return l.substr(0, l.size() - 2) + "ying";
  if (ends_with(l, "ee") || ends_with(l, "ye") || ends_with(l, "oe")) return l + "ing";
  if (ends_with(l, "e") && l.size() > 2) return l.substr(0, l.size() - 1) + "ing";
  if (doubles(l)) return l + l.back() + "ing";
  return l + "ing";
}

std::string Morphology::adjective_base(std::string_view word, std::string_view tag) const {
  std::string w = to_lower(word);
  static const std::map<std::string, std::string, std::less<>> irregular = {
      {"better", "good"}, {"best", "good"},   {"worse", "bad"},    {"worst", "bad"},
      {"further", "far"}, {"furthest", "far"}, {"farther", "far"}, {"farthest", "far"},
      {"less", "little"}, {"least", "little"}, {"more", "much"},   {"most", "much"}};
  if (auto it = irregular.find(w); it != irregular.end()) return it->second;
  std::string stem;
  if (ends_with(w, "iest") && w.size() > 5)
    return w.substr(0, w.size() - 4) + "y";
  if (ends_with(w, "ier") && w.size() > 4)
    return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "est") && w.size() > 4)
    stem = w.substr(0, w.size() - 3);
  else if (ends_with(w, "er") && w.size() > 3 && (tag == "JJR" || tag == "RBR"))
    stem = w.substr(0, w.size() - 2);
  else
    return w;
  if (tag != "JJR" && tag != "JJS" && tag != "RBR" && tag != "RBS") return w;
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && std::string_view("bdgmnpt").find(stem[n - 1]) != std::string_view::npos)
    return stem.substr(0, n - 1);
  if (stem.back() == 'u' || ends_with(stem, "rg") || (ends_with(stem, "ng") && n <= 3)) return stem + "e";
  if (stem.back() == 'l' && n >= 2 && !is_vowel(stem[n - 2]) && stem[n - 2] != 'l' && stem[n - 2] != 'r')
    return stem + "e";
  if (cvc(stem) && stem[n - 2] != 'e' && std::string_view("tdrszcvgkmnpbf").find(stem.back()) != std::string_view::npos)
    return stem + "e";
  return stem;
}

std::string Morphology::noun_lemma(std::string_view word, std::string_view tag) const {
  std::string w = to_lower(word);
  if (tag != "NNS" && tag != "NNPS") return w;
  static const std::map<std::string, std::string, std::less<>> irregular = {
      {"men", "man"}, {"women", "woman"}, {"children", "child"}, {"people", "person"},
      {"feet", "foot"}, {"teeth", "tooth"}, {"mice", "mouse"}, {"times", "time"}};
  if (auto it = irregular.find(w); it != irregular.end()) return it->second;
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view suf : {"sses", "shes", "ches", "xes", "zes"})
    if (ends_with(w, suf)) return w.substr(0, w.size() - 2);
  if (ends_with(w, "s") && !ends_with(w, "ss")) return w.substr(0, w.size() - 1);
  return w;
}

}  // namespace pleo
