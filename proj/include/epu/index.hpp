#pragma once

// Monthly per-source frequencies, trailing-window normalization, and
// cross-source aggregation into the uncertainty index.
//
// For month t the normalization window W(t) is the m months strictly
// before t. F is first scaled by the sample standard deviation of F over
// W(t), then the scaled series G is divided by its own mean over W(t).
// Each past month's G inside the averaging window is that month's own G,
// computed from its own trailing window. A window contributes only when
// it holds at least ceil(min_coverage * m) non-missing values; degenerate
// windows (zero variance, non-positive mean) yield missing, not failure.
// Nothing at month t ever depends on data after t.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace epu {

struct normalization_params {
  int m = 36;                // window length in months
  double min_coverage = 0.8; // fraction of window months that must be present
};

struct monthly_source_series {
  std::string source;
  int first_month = 0;  // month id of index 0

  std::vector<std::int64_t> triple_sum;
  std::vector<std::int64_t> token_sum;
  std::vector<int> doc_count;
  std::vector<std::optional<double>> F;    // triple_sum / token_sum
  std::vector<std::optional<double>> G;    // F / trailing sd of F
  std::vector<std::optional<double>> epu;  // G / trailing mean of G

  size_t n_months() const { return F.size(); }
  int month_at(size_t i) const { return first_month + (int)i; }
  int last_month() const { return first_month + (int)n_months() - 1; }
};

// F for one (source, month) from its documents' (triple, token) counts.
// Missing when the month has no documents; throws data_error when
// documents exist but carry zero tokens in total.
std::optional<double> monthly_frequency(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& docs);

// Fills G and epu from F. Idempotent; reads nothing but F.
void normalize_source(monthly_source_series& series,
                      const normalization_params& params);

struct epu_index {
  int first_month = 0;
  std::vector<std::optional<double>> value;        // mean of defined EPU_{t,s}
  std::vector<int> n_sources;                      // S_t
  std::vector<std::vector<std::string>> contributors;

  size_t n_months() const { return value.size(); }
  int month_at(size_t i) const { return first_month + (int)i; }
};

// Equal-weight mean over the sources with a defined value in each month.
// Sources enter and leave the sample freely; order does not matter.
epu_index aggregate_index(const std::vector<monthly_source_series>& sources);

}  // namespace epu
