#include "pleo/evalstats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>

#include <json.hpp>

#include "pleo/data.hpp"
#include "pleo/rng.hpp"

namespace pleo {

double precision(const ConfusionCounts& c) {
  if (c.tp + c.fp == 0) throw UndefinedMetric("precision undefined: nothing was identified");
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

double recall(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0) throw UndefinedMetric("recall undefined: no reference instances");
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

double f_measure(const ConfusionCounts& c) {
  const double p = precision(c), r = recall(c);
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

PRF prf(const ConfusionCounts& c) {
  PRF out;
  if (c.tp + c.fp) out.p = precision(c);
  if (c.tp + c.fn) out.r = recall(c);
  if (out.p && out.r) out.f = (*out.p + *out.r == 0) ? 0.0 : 2 * *out.p * *out.r / (*out.p + *out.r);
  return out;
}

std::string_view to_string(MetricKind m) {
  switch (m) {
    case MetricKind::Precision: return "P";
    case MetricKind::Recall: return "R";
    case MetricKind::F: return "F";
    case MetricKind::Accuracy: return "A";
  }
  return "?";
}

MetricKind parse_metric(std::string_view name) {
  const std::string n = to_lower(name);
  if (n == "p" || n == "precision") return MetricKind::Precision;
  if (n == "r" || n == "recall") return MetricKind::Recall;
  if (n == "f" || n == "f-measure" || n == "f1") return MetricKind::F;
  if (n == "a" || n == "accuracy") return MetricKind::Accuracy;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "' (expected p, r, f or accuracy)");
}

std::optional<double> metric_value(const ConfusionCounts& c, MetricKind m) {
  const PRF v = prf(c);
  switch (m) {
    case MetricKind::Precision: return v.p;
    case MetricKind::Recall: return v.r;
    case MetricKind::F: return v.f;
    case MetricKind::Accuracy: {
      const auto n = c.tp + c.fp + c.fn + c.tn;
      if (n == 0) return std::nullopt;
      return static_cast<double>(c.tp + c.tn) / static_cast<double>(n);
    }
  }
  return std::nullopt;
}

ConfusionCounts tally(const std::vector<BinaryOutcome>& outcomes) {
  ConfusionCounts c;
  for (const auto& o : outcomes) {
    if (o.gold && o.pred) ++c.tp;
    else if (o.pred) ++c.fp;
    else if (o.gold) ++c.fn;
    else ++c.tn;
  }
  return c;
}

std::string_view to_string(IntervalEstimate::Method m) {
  return m == IntervalEstimate::Method::AdjustedWald ? "adjusted-wald" : "bootstrap-percentile";
}

IntervalEstimate adjusted_wald(std::uint64_t x, std::uint64_t n, double z) {
  if (n == 0 || x > n) throw std::invalid_argument("adjusted Wald needs 0 <= x <= n and n >= 1");
  const double z2 = z * z;
  const double nt = static_cast<double>(n) + z2;
  const double pt = (static_cast<double>(x) + z2 / 2) / nt;
  const double half = z * std::sqrt(pt * (1 - pt) / nt);
  IntervalEstimate e;
  e.point = static_cast<double>(x) / static_cast<double>(n);
  e.lo = std::clamp(pt - half, 0.0, 1.0);
  e.hi = std::clamp(pt + half, 0.0, 1.0);
  e.method = IntervalEstimate::Method::AdjustedWald;
  return e;
}

namespace {

// Successes and trials behind an extreme point estimate.
std::pair<std::uint64_t, std::uint64_t> wald_counts(const ConfusionCounts& c, MetricKind m) {
  switch (m) {
    case MetricKind::Precision: return {c.tp, c.tp + c.fp};
    case MetricKind::Recall: return {c.tp, c.tp + c.fn};
    case MetricKind::F: return {2 * c.tp, 2 * c.tp + c.fp + c.fn};
    case MetricKind::Accuracy: return {c.tp + c.tn, c.tp + c.tn + c.fp + c.fn};
  }
  return {0, 0};
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::size_t percentile_index(std::size_t m, double q) {
  const double pos = std::floor(static_cast<double>(m + 1) * q + 1e-9);
  const auto idx = static_cast<long long>(pos) - 1;
  return static_cast<std::size_t>(std::clamp<long long>(idx, 0, static_cast<long long>(m) - 1));
}

}  // namespace

IntervalEstimate bootstrap_ci(const std::vector<BinaryOutcome>& outcomes, MetricKind metric,
                              const BootstrapOptions& opt) {
  if (outcomes.empty()) throw EmptySample("bootstrap needs at least one instance");
  if (opt.replicates == 0) throw std::invalid_argument("bootstrap needs at least one replicate");
  const ConfusionCounts full = tally(outcomes);
  const auto point = metric_value(full, metric);
  if (!point) throw UndefinedMetric(std::string(to_string(metric)) + " is undefined on the full sample");
  if (*point == 0.0 || *point == 1.0) {
    auto [x, n] = wald_counts(full, metric);
    return adjusted_wald(x, n, opt.wald_z);
  }

  const std::size_t n = outcomes.size();
  std::vector<double> values(opt.replicates, std::nan(""));
  parallel_for(opt.replicates, opt.threads, [&](std::size_t b) {
    Rng rng = Rng::substream(opt.seed, b);
    ConfusionCounts c;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& o = outcomes[rng.below(n)];
      if (o.gold && o.pred) ++c.tp;
      else if (o.pred) ++c.fp;
      else if (o.gold) ++c.fn;
      else ++c.tn;
    }
    if (auto v = metric_value(c, metric)) values[b] = *v;
  });
  values.erase(std::remove_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }), values.end());
  if (values.empty()) throw UndefinedMetric("metric undefined on every bootstrap replicate");
  std::sort(values.begin(), values.end());
  IntervalEstimate e;
  e.point = *point;
  e.lo = values[percentile_index(values.size(), 0.025)];
  e.hi = values[percentile_index(values.size(), 0.975)];
  e.method = IntervalEstimate::Method::BootstrapPercentile;
  return e;
}

RandomizationResult approx_randomization(const std::vector<BinaryOutcome>& a, const std::vector<BinaryOutcome>& b,
                                         MetricKind statistic, const RandomizationOptions& opt) {
  if (a.size() != b.size()) throw MisalignedOutputs("systems cover different numbers of instances");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].gold != b[i].gold) throw MisalignedOutputs("gold labels differ at instance " + std::to_string(i));
  if (opt.shuffles == 0) throw std::invalid_argument("randomization needs at least one shuffle");

  auto stat = [&](const ConfusionCounts& c) { return metric_value(c, statistic).value_or(0.0); };
  RandomizationResult res;
  res.difference = stat(tally(a)) - stat(tally(b));
  res.sign = res.difference > 0 ? 1 : (res.difference < 0 ? -1 : 0);
  const double observed = std::fabs(res.difference);
  constexpr double eps = 1e-12;

  std::vector<unsigned char> hit(opt.shuffles, 0);
  parallel_for(opt.shuffles, opt.threads, [&](std::size_t s) {
    Rng rng = Rng::substream(opt.seed, s);
    ConfusionCounts ca, cb;
    auto add = [](ConfusionCounts& c, const BinaryOutcome& o) {
      if (o.gold && o.pred) ++c.tp;
      else if (o.pred) ++c.fp;
      else if (o.gold) ++c.fn;
      else ++c.tn;
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (rng.coin()) {
        add(ca, b[i]);
        add(cb, a[i]);
      } else {
        add(ca, a[i]);
        add(cb, b[i]);
      }
    }
    hit[s] = std::fabs(stat(ca) - stat(cb)) >= observed - eps;
  });
  for (auto h : hit) res.at_least_as_extreme += h;
  res.p_value = static_cast<double>(res.at_least_as_extreme + 1) / static_cast<double>(opt.shuffles + 1);
  return res;
}

double cohen_kappa(const std::vector<std::string>& ann1, const std::vector<std::string>& ann2) {
  if (ann1.size() != ann2.size()) throw MisalignedOutputs("annotation lists differ in length");
  if (ann1.empty()) throw EmptySample("kappa needs at least one item");
  std::map<std::string, double> m1, m2;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < ann1.size(); ++i) {
    m1[ann1[i]] += 1;
    m2[ann2[i]] += 1;
    if (ann1[i] == ann2[i]) ++agree;
  }
  const double n = static_cast<double>(ann1.size());
  const double po = static_cast<double>(agree) / n;
  double pe = 0;
  for (const auto& [label, count] : m1)
    if (auto it = m2.find(label); it != m2.end()) pe += (count / n) * (it->second / n);
  if (std::fabs(1 - pe) < 1e-15) throw DegenerateMarginals("kappa undefined: chance agreement is 1");
  return (po - pe) / (1 - pe);
}

// --------------------------------------------------------------------- files

namespace {

ItLabel require_label(const std::string& text, const std::string& where) {
  auto l = parse_label(text);
  if (!l) throw std::runtime_error(where + ": unknown label '" + text + "'");
  return *l;
}

std::size_t parse_index(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": bad token index '" + text + "'");
  }
}

void insert_unique(LabelMap& m, InstanceKey key, ItLabel label, const std::string& where) {
  if (!m.emplace(key, label).second)
    throw std::runtime_error(where + ": duplicate entry for " + key.sentence_id + " token " +
                             std::to_string(key.token_index));
}

}  // namespace

LabelMap parse_label_tsv(std::string_view text, const std::string& source) {
  LabelMap out;
  std::size_t lineno = 0;
  for (auto line : split(text, '\n')) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno);
    auto f = split(line, '\t');
    if (f.size() < 3) throw std::runtime_error(where + ": expected sentence_id<TAB>token_index<TAB>label");
    insert_unique(out, {trim(f[0]), parse_index(trim(f[1]), where)}, require_label(trim(f[2]), where), where);
  }
  return out;
}

LabelMap parse_predictions(std::string_view text, const std::string& source) {
  const std::string t = trim(text);
  if (t.empty() || t[0] != '{') return parse_label_tsv(text, source);
  LabelMap out;
  std::size_t lineno = 0;
  for (const auto& line : split(text, '\n')) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      insert_unique(out, {j.at("sentence_id").get<std::string>(), j.at("token_index").get<std::size_t>()},
                    require_label(j.at("label").get<std::string>(), where), where);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  return out;
}

LabelMap read_labels(const std::string& path) { return parse_predictions(read_file(path), path); }

std::vector<BinaryOutcome> outcomes_for(const LabelMap& gold, const LabelMap& pred, const std::string& category) {
  if (gold.size() != pred.size()) throw MisalignedOutputs("gold and predictions cover different instances");
  std::optional<ItLabel> target;
  if (category != "overall") {
    target = parse_label(category);
    if (!target) throw std::invalid_argument("unknown category " + category);
  }
  auto member = [&](ItLabel l) { return target ? l == *target : is_pleonastic(l); };
  std::vector<BinaryOutcome> out;
  out.reserve(gold.size());
  for (const auto& [key, g] : gold) {
    auto it = pred.find(key);
    if (it == pred.end())
      throw MisalignedOutputs("no prediction for " + key.sentence_id + " token " + std::to_string(key.token_index));
    out.push_back({member(g), member(it->second)});
  }
  return out;
}

EvalReport evaluate(const LabelMap& gold, const LabelMap& pred, const BootstrapOptions& opt, bool intervals) {
  EvalReport rep;
  for (const std::string name : {"extraposition", "cleft", "weather_time", "overall"}) {
    CategoryScore s;
    s.name = name;
    const auto outcomes = outcomes_for(gold, pred, name);
    s.counts = tally(outcomes);
    s.prf = prf(s.counts);
    if (intervals && !outcomes.empty()) {
      auto ci = [&](MetricKind m) -> std::optional<IntervalEstimate> {
        try {
          return bootstrap_ci(outcomes, m, opt);
        } catch (const UndefinedMetric&) {
          return std::nullopt;
        }
      };
      s.p_ci = ci(MetricKind::Precision);
      s.r_ci = ci(MetricKind::Recall);
      s.f_ci = ci(MetricKind::F);
    }
    rep.categories.push_back(std::move(s));
  }
  rep.instances = gold.size();
  for (const auto& [key, g] : gold)
    if (pred.at(key) == g) ++rep.correct;
  return rep;
}

namespace {

std::string pct(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v * 100);
  return buf;
}

std::string interval(const std::optional<IntervalEstimate>& e) {
  if (!e) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f-%.2f%s", e->lo * 100, e->hi * 100,
                e->method == IntervalEstimate::Method::AdjustedWald ? "*" : "");
  return buf;
}

}  // namespace

std::string format_report(const EvalReport& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-14s %5s %5s %5s %8s %8s %8s  %-16s %-16s %-16s\n", "category", "TP", "FP", "FN",
                "P%", "R%", "F%", "P 95% CI", "R 95% CI", "F 95% CI");
  out += buf;
  for (const auto& c : r.categories) {
    std::snprintf(buf, sizeof buf, "%-14s %5llu %5llu %5llu %8s %8s %8s  %-16s %-16s %-16s\n", c.name.c_str(),
                  static_cast<unsigned long long>(c.counts.tp), static_cast<unsigned long long>(c.counts.fp),
                  static_cast<unsigned long long>(c.counts.fn), pct(c.prf.p).c_str(), pct(c.prf.r).c_str(),
                  pct(c.prf.f).c_str(), interval(c.p_ci).c_str(), interval(c.r_ci).c_str(), interval(c.f_ci).c_str());
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "accuracy %zu/%zu = %s%%\n", r.correct, r.instances,
                pct(r.instances ? std::optional<double>(static_cast<double>(r.correct) / static_cast<double>(r.instances))
                                : std::nullopt)
                    .c_str());
  out += buf;
  out += "(* adjusted Wald interval)\n";
  return out;
}

std::string format_significance(MetricKind statistic, const RandomizationResult& r) {
  static const char* names[] = {"Precision", "Recall", "F-measure", "Accuracy"};
  const char* sign = r.sign > 0 ? "+" : (r.sign < 0 ? "-" : "=");
  char p[32];
  if (r.p_value < 0.001)
    std::snprintf(p, sizeof p, "p < .001");
  else if (r.p_value >= 0.9995)
    std::snprintf(p, sizeof p, "p = 1.00");
  else
    std::snprintf(p, sizeof p, "p = .%03d", static_cast<int>(std::lround(r.p_value * 1000)));
  return std::string(names[static_cast<int>(statistic)]) + "^" + sign + "/" + p;
}

}  // namespace pleo
