#ifndef PLEO_DECISION_HPP
#define PLEO_DECISION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pleo/corpus.hpp"
#include "pleo/filters.hpp"
#include "pleo/labels.hpp"
#include "pleo/querygen.hpp"

namespace pleo {

struct DecisionConstants {
  double n_min = 10;
  double r_exp = 0.15;
  double r_scarce = 1000;
  double r_zero = 100;

  // Throws std::invalid_argument unless n_min >= 1 and 0 < r_exp < r_zero < r_scarce.
  void validate() const;
};

// n_num / n_den with sentinels for scarce and zero-denominator counts.
double compute_ratio(std::uint64_t n_num, std::uint64_t n_den, const DecisionConstants& c);
double synthesize_R(double r, double r_prime, std::uint64_t n_it, std::uint64_t n_x, const DecisionConstants& c);

struct QueryRecord {
  QueryPurpose purpose = QueryPurpose::PatternI;
  std::string query;
  std::uint64_t count = 0;
  std::size_t snippets = 0;
  std::string backend;
  bool cached = false;
};

struct EvidenceRecord {
  std::uint64_t n_w = 0, n_it = 0, n_x = 0, n_it_prime = 0, n_x_prime = 0;
  double v_w = 0;
  double W = 0, r = 0, r_prime = 0, R = 0;
  bool S = false;
  bool E = false;
  bool stepped_down = false;  // r' from II' queries rather than a copy of r
  std::optional<std::uint64_t> p3_prep, p3_det;
  bool p3_veto = false;
  std::vector<QueryRecord> queries;
};

// E from the evidence fields alone: R < R_exp, and W > N_min when S holds.
bool classify_reading(const EvidenceRecord& ev, const DecisionConstants& c);

struct EvidenceOptions {
  bool pattern3_veto = false;
  double pattern3_ratio = 2.0;  // det count >= ratio * prep count vetoes E
};

// Runs the bundle's queries and fills every evidence field.
EvidenceRecord gather_evidence(const QueryBundle& bundle, const Backend& backend, const DecisionConstants& c,
                               const EvidenceOptions& opt = {});

struct ReadingResult {
  Reading reading;
  SyntacticVerdict verdict;
  std::optional<QueryBundle> bundle;
  std::optional<EvidenceRecord> evidence;
};

struct SentenceVerdict {
  std::string sentence_id;
  std::size_t token_index = 0;
  GrammaticalRole role = GrammaticalRole::Subject;
  ItLabel label = ItLabel::Nominal;
  std::vector<ReadingResult> readings;
  std::string note;  // diagnostics such as a missing governing verb
};

// weather/time, then cleft, then extraposition; otherwise referential.
ItLabel classify_sentence(const std::vector<ReadingResult>& readings);

}  // namespace pleo

#endif
