#ifndef PLEO_MORPHOLOGY_HPP
#define PLEO_MORPHOLOGY_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace pleo {

// Rule-based English inflector backed by an irregular-form table.  Covers
// what query instantiation needs: verb lemmas and the 3sg / past / gerund
// forms, adjective base forms and noun singulars.
class Morphology {
 public:
  // irregular: "<lemma> <past> <participle> [<3sg>]" per line.
  // doubling: verbs (one per line) that double their final consonant
  // despite having more than one syllable (program -> programmed).
  static Morphology parse(std::string_view irregular, std::string_view doubling);
  static const Morphology& builtin();

  std::string verb_lemma(std::string_view word, std::string_view tag) const;
  std::string third_singular(std::string_view lemma) const;
  std::string past(std::string_view lemma) const;
  std::string past_participle(std::string_view lemma) const;
  std::string gerund(std::string_view lemma) const;

  // easier -> easy, best -> good; other words come back unchanged.
  std::string adjective_base(std::string_view word, std::string_view tag) const;
  std::string noun_lemma(std::string_view word, std::string_view tag) const;

 private:
  struct Forms {
    std::string past, participle, third;
  };
  bool doubles(std::string_view lemma) const;
  std::string restore_stem(std::string stem) const;

  std::map<std::string, Forms, std::less<>> forms_;
  std::map<std::string, std::string, std::less<>> inflected_to_lemma_;
  std::set<std::string, std::less<>> doubling_;
};

bool is_be_form(std::string_view lower_word);
bool is_have_form(std::string_view lower_word);

}  // namespace pleo

#endif
