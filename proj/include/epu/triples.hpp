#pragma once

// Distance-constrained (economy, policy, uncertainty) keyword triples and
// the per-document unique-triple count. A token position can only be used
// once: counted triples must occupy pairwise-disjoint position sets.

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "epu/lexicon.hpp"

namespace epu {

struct triple_params {
  // Maximum pairwise token distance inside a triple. Infinity allowed for
  // article-level sources.
  double tau = 125.0;
  std::map<std::string, double> per_source;

  double tau_for(const std::string& source) const {
    auto it = per_source.find(source);
    return it == per_source.end() ? tau : it->second;
  }
  static constexpr double infinite = std::numeric_limits<double>::infinity();
};

// Minimum absolute position difference over the two occupied sets. For
// multi-token keywords this is the gap between their spans (0 if they
// overlap).
int pairwise_distance(const keyword_occurrence& a, const keyword_occurrence& b);

struct candidate_triple {
  keyword_occurrence e, p, u;
  int span = 0;                // max of the three pairwise distances
  std::vector<int> occupied;   // sorted union of the three position sets

  int min_pos() const { return occupied.front(); }
  int max_pos() const { return occupied.back(); }
};

// Every (e,p,u) combination whose span is <= tau and whose three
// occurrences do not share a position. Sorted by (min occupied position,
// occupied set lexicographically).
std::vector<candidate_triple> candidate_triples(
    const std::vector<keyword_occurrence>& occs, double tau);

inline std::vector<candidate_triple> candidate_triples(
    const std::vector<keyword_occurrence>& occs, const triple_params& params,
    const std::string& source = {}) {
  return candidate_triples(occs, params.tau_for(source));
}

struct triple_selection {
  std::vector<candidate_triple> selected;
  int count = 0;  // == selected.size()
};

// Greedy disjoint selection: candidates are visited sorted by
// (max occupied position, min occupied position, occupied set) and taken
// whenever disjoint from everything taken before. Deterministic and
// linear-time over the candidate list.
triple_selection select_unique_triples(std::vector<candidate_triple> cands);

// Exact maximum number of pairwise-disjoint candidates by exhaustive
// search with pruning. Test oracle; throws data_error above 24 candidates
// (sample the instance down instead).
int max_disjoint_oracle(const std::vector<candidate_triple>& cands);

// Convenience: match -> candidates -> greedy selection -> count.
int count_unique_triples(const token_vector& tokens, const lexicon& lex,
                         double tau);

}  // namespace epu
