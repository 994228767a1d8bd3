#include "epu/index.hpp"

#include <algorithm>
#include <cmath>

#include "epu/errors.hpp"

namespace epu {

std::optional<double> monthly_frequency(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& docs) {
  if (docs.empty()) return std::nullopt;
  std::int64_t tri = 0, tok = 0;
  for (auto& [t, k] : docs) {
    tri += t;
    tok += k;
  }
  if (tok == 0)
    throw data_error("empty documents in month: token total is zero with " +
                     std::to_string(docs.size()) + " documents");
  return (double)tri / (double)tok;
}

namespace {

struct window_stats {
  int n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, divisor n-1
};

// Stats of the non-missing values in the m months strictly before index t.
window_stats trailing_stats(const std::vector<std::optional<double>>& v,
                            size_t t, int m) {
  window_stats s;
  size_t lo = t >= (size_t)m ? t - m : 0;
  double sum = 0.0;
  for (size_t i = lo; i < t; ++i)
    if (v[i]) {
      ++s.n;
      sum += *v[i];
    }
  if (s.n == 0) return s;
  s.mean = sum / s.n;
  if (s.n >= 2) {
    double ss = 0.0;
    for (size_t i = lo; i < t; ++i)
      if (v[i]) {
        double d = *v[i] - s.mean;
        ss += d * d;
      }
    s.sd = std::sqrt(ss / (s.n - 1));
  }
  return s;
}

}  // namespace

void normalize_source(monthly_source_series& series,
                      const normalization_params& params) {
  const int m = params.m;
  if (m < 2) throw config_error("normalization window m must be >= 2");
  if (!(params.min_coverage > 0.0 && params.min_coverage <= 1.0))
    throw config_error("min_coverage must lie in (0, 1]");
  const int need = (int)std::ceil(params.min_coverage * m);
  const size_t n = series.F.size();

  series.G.assign(n, std::nullopt);
  series.epu.assign(n, std::nullopt);

  for (size_t t = 0; t < n; ++t) {
    if (!series.F[t] || t < (size_t)m) continue;
    auto ws = trailing_stats(series.F, t, m);
    if (ws.n < need || !(ws.sd > 0.0)) continue;
    series.G[t] = *series.F[t] / ws.sd;
  }
  for (size_t t = 0; t < n; ++t) {
    if (!series.G[t] || t < (size_t)m) continue;
    auto ws = trailing_stats(series.G, t, m);
    if (ws.n < need || !(ws.mean > 0.0)) continue;
    series.epu[t] = *series.G[t] / ws.mean;
  }
}

epu_index aggregate_index(const std::vector<monthly_source_series>& sources) {
  epu_index idx;
  if (sources.empty()) return idx;
  int lo = sources.front().first_month, hi = sources.front().last_month();
  for (const auto& s : sources) {
    lo = std::min(lo, s.first_month);
    hi = std::max(hi, s.last_month());
  }
  idx.first_month = lo;
  size_t n = (size_t)(hi - lo + 1);
  idx.value.assign(n, std::nullopt);
  idx.n_sources.assign(n, 0);
  idx.contributors.assign(n, {});

  // Accumulate in source-name order so the float sum does not depend on
  // the order sources were supplied in.
  std::vector<const monthly_source_series*> ordered;
  for (const auto& s : sources) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const monthly_source_series* a, const monthly_source_series* b) {
              return a->source < b->source;
            });

  for (size_t i = 0; i < n; ++i) {
    int month = lo + (int)i;
    double sum = 0.0;
    int count = 0;
    for (const auto* s : ordered) {
      int j = month - s->first_month;
      if (j < 0 || j >= (int)s->n_months() || !s->epu[j]) continue;
      sum += *s->epu[j];
      ++count;
      idx.contributors[i].push_back(s->source);
    }
    idx.n_sources[i] = count;
    if (count > 0) idx.value[i] = sum / count;
  }
  return idx;
}

}  // namespace epu
