#include "pleo/decision.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleo {

void DecisionConstants::validate() const {
  if (!(n_min >= 1)) throw std::invalid_argument("N_min must be at least 1");
  if (!(r_exp > 0 && r_exp < r_zero && r_zero < r_scarce))
    throw std::invalid_argument("constants must satisfy 0 < R_exp < R_zero < R_scarce");
}

double compute_ratio(std::uint64_t n_num, std::uint64_t n_den, const DecisionConstants& c) {
  const auto hi = static_cast<double>(std::max(n_num, n_den));
  if (hi < c.n_min) return c.r_scarce;
  if (n_den == 0) return c.r_zero;  // n_num >= N_min here
  return static_cast<double>(n_num) / static_cast<double>(n_den);
}

double synthesize_R(double r, double r_prime, std::uint64_t n_it, std::uint64_t n_x, const DecisionConstants& c) {
  return static_cast<double>(std::max(n_it, n_x)) >= c.n_min ? r : r_prime;
}

bool classify_reading(const EvidenceRecord& ev, const DecisionConstants& c) {
  if (ev.S) return ev.R < c.r_exp && ev.W > c.n_min;
  return ev.R < c.r_exp;
}

EvidenceRecord gather_evidence(const QueryBundle& bundle, const Backend& backend, const DecisionConstants& c,
                               const EvidenceOptions& opt) {
  EvidenceRecord ev;
  const std::size_t batch = backend.capabilities().snippet_batch;
  auto run = [&](const Query& q) {
    HitResult hit = backend.count(q);
    QueryRecord rec{q.purpose, q.serialize(), hit.count, hit.snippets.size(), backend.name(), false};
    if (auto* cache = dynamic_cast<const CachingBackend*>(&backend)) rec.cached = cache->was_cached(q);
    ev.queries.push_back(rec);
    if (hit.snippets.size() > batch) hit.snippets.resize(batch);
    return hit;
  };
  auto count_of = [&](QueryPurpose p) -> std::optional<HitResult> {
    if (const Query* q = bundle.find(p)) return run(*q);
    return std::nullopt;
  };

  const auto kind = bundle.candidate.matrix_kind;
  if (kind == MatrixKind::ObjectOfVerb || kind == MatrixKind::ObjectOfPreposition) {
    // the object pair stands in for the II pair
    ev.n_it = count_of(QueryPurpose::ObjectIt).value_or(HitResult{}).count;
    ev.n_x = count_of(QueryPurpose::ObjectThem).value_or(HitResult{}).count;
    ev.n_it_prime = ev.n_it;
    ev.n_x_prime = ev.n_x;
  } else {
    if (auto one = count_of(QueryPurpose::PatternI)) {
      ev.n_w = one->count;
      ev.v_w = validate_what_cleft(one->snippets, *bundle.find(QueryPurpose::PatternI));
    }
    ev.n_it = count_of(QueryPurpose::PatternII_it).value_or(HitResult{}).count;
    ev.n_x = count_of(QueryPurpose::PatternII_others).value_or(HitResult{}).count;
    if (bundle.has_stepped_down()) {
      ev.stepped_down = true;
      ev.n_it_prime = count_of(QueryPurpose::PatternIIp_it).value_or(HitResult{}).count;
      ev.n_x_prime = count_of(QueryPurpose::PatternIIp_others).value_or(HitResult{}).count;
    } else {
      ev.n_it_prime = ev.n_it;
      ev.n_x_prime = ev.n_x;
    }
    if (bundle.find(QueryPurpose::P3_gerund_prep) && bundle.find(QueryPurpose::P3_gerund_det)) {
      count_of(QueryPurpose::P3_compound);
      ev.p3_prep = count_of(QueryPurpose::P3_gerund_prep)->count;
      ev.p3_det = count_of(QueryPurpose::P3_gerund_det)->count;
    }
  }
  ev.W = static_cast<double>(ev.n_w) * ev.v_w;
  ev.r = compute_ratio(ev.n_x, ev.n_it, c);
  ev.r_prime = ev.stepped_down ? compute_ratio(ev.n_x_prime, ev.n_it_prime, c) : ev.r;
  ev.R = synthesize_R(ev.r, ev.r_prime, ev.n_it, ev.n_x, c);
  ev.S = bundle.candidate.s_flag;
  ev.E = classify_reading(ev, c);
  if (opt.pattern3_veto && ev.p3_det && ev.p3_prep && *ev.p3_det > 0 &&
      static_cast<double>(*ev.p3_det) >= opt.pattern3_ratio * static_cast<double>(*ev.p3_prep)) {
    ev.p3_veto = true;
    ev.E = false;
  }
  return ev;
}

ItLabel classify_sentence(const std::vector<ReadingResult>& readings) {
  bool cleft = false, extraposition = false;
  for (const auto& r : readings) {
    if (r.verdict.kind == VerdictKind::WeatherTime) return ItLabel::WeatherTime;
    if (r.verdict.kind == VerdictKind::Cleft) cleft = true;
    if (r.evidence && r.evidence->E) extraposition = true;
  }
  if (cleft) return ItLabel::Cleft;
  if (extraposition) return ItLabel::Extraposition;
  return ItLabel::Nominal;
}

}  // namespace pleo
