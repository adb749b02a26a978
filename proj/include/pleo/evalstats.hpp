#ifndef PLEO_EVALSTATS_HPP
#define PLEO_EVALSTATS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pleo/labels.hpp"

namespace pleo {

class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class EmptySample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class MisalignedOutputs : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class DegenerateMarginals : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ConfusionCounts {
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
};

// Undefined values (zero denominators) are empty.
struct PRF {
  std::optional<double> p, r, f;
};

double precision(const ConfusionCounts& c);  // throws UndefinedMetric
double recall(const ConfusionCounts& c);     // throws UndefinedMetric
double f_measure(const ConfusionCounts& c);  // throws UndefinedMetric; 0 when P + R = 0
PRF prf(const ConfusionCounts& c);

enum class MetricKind { Precision, Recall, F, Accuracy };
std::string_view to_string(MetricKind m);
MetricKind parse_metric(std::string_view name);  // p / r / f / accuracy

std::optional<double> metric_value(const ConfusionCounts& c, MetricKind m);

// Gold and predicted membership of one instance in the scored class.
struct BinaryOutcome {
  bool gold = false;
  bool pred = false;
};
ConfusionCounts tally(const std::vector<BinaryOutcome>& outcomes);

struct IntervalEstimate {
  enum class Method { BootstrapPercentile, AdjustedWald };
  double point = 0;  // fractions in [0, 1]
  double lo = 0;
  double hi = 0;
  Method method = Method::BootstrapPercentile;
};
std::string_view to_string(IntervalEstimate::Method m);

// z for a one-sided 95% bound; two-sided 95% is 1.959964.
inline constexpr double kDefaultWaldZ = 1.6448536269514722;

IntervalEstimate adjusted_wald(std::uint64_t successes, std::uint64_t trials, double z = kDefaultWaldZ);

struct BootstrapOptions {
  std::size_t replicates = 9999;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double wald_z = kDefaultWaldZ;
};

// Percentile interval from resampled instances.  A point estimate of 0 or 1
// switches to the adjusted Wald interval.  Throws EmptySample and
// UndefinedMetric (when the metric is undefined on the full sample).
IntervalEstimate bootstrap_ci(const std::vector<BinaryOutcome>& outcomes, MetricKind metric,
                              const BootstrapOptions& opt = {});

struct RandomizationOptions {
  std::size_t shuffles = 9999;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct RandomizationResult {
  double difference = 0;  // stat(A) - stat(B)
  double p_value = 1;
  int sign = 0;           // sign of the difference
  std::size_t at_least_as_extreme = 0;
};

// Outputs must cover the same instances with the same gold labels.
RandomizationResult approx_randomization(const std::vector<BinaryOutcome>& a, const std::vector<BinaryOutcome>& b,
                                         MetricKind statistic, const RandomizationOptions& opt = {});

double cohen_kappa(const std::vector<std::string>& ann1, const std::vector<std::string>& ann2);

// ---- files and reports ----

struct InstanceKey {
  std::string sentence_id;
  std::size_t token_index = 0;
  auto operator<=>(const InstanceKey&) const = default;
};
using LabelMap = std::map<InstanceKey, ItLabel>;

// sentence_id<TAB>token_index<TAB>label
LabelMap parse_label_tsv(std::string_view text, const std::string& source = "input");
// JSON lines with sentence_id / token_index / label, or the TSV above.
LabelMap parse_predictions(std::string_view text, const std::string& source = "input");
LabelMap read_labels(const std::string& path);

struct CategoryScore {
  std::string name;
  ConfusionCounts counts;
  PRF prf;
  std::optional<IntervalEstimate> p_ci, r_ci, f_ci;
};

struct EvalReport {
  std::vector<CategoryScore> categories;  // extraposition, cleft, weather_time, overall
  std::size_t instances = 0;
  std::size_t correct = 0;  // exact label agreement
};

// Per-instance outcomes for one category ("overall" = any pleonastic label).
std::vector<BinaryOutcome> outcomes_for(const LabelMap& gold, const LabelMap& pred, const std::string& category);

EvalReport evaluate(const LabelMap& gold, const LabelMap& pred, const BootstrapOptions& opt, bool intervals = true);
std::string format_report(const EvalReport& report);

// "F-measure^+/p = .033" style cell: statistic, sign of A - B (= for a tie), p-value.
std::string format_significance(MetricKind statistic, const RandomizationResult& r);

}  // namespace pleo

#endif
