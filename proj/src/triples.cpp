#include "epu/triples.hpp"

#include <algorithm>
#include <unordered_set>

#include "epu/errors.hpp"

namespace epu {

int pairwise_distance(const keyword_occurrence& a,
                      const keyword_occurrence& b) {
  // Occupied sets are contiguous, so the minimum over all position pairs
  // is the gap between the two intervals.
  if (a.last() < b.start) return b.start - a.last();
  if (b.last() < a.start) return a.start - b.last();
  return 0;
}

namespace {

bool overlaps(const keyword_occurrence& a, const keyword_occurrence& b) {
  return a.start <= b.last() && b.start <= a.last();
}

candidate_triple make_triple(const keyword_occurrence& e,
                             const keyword_occurrence& p,
                             const keyword_occurrence& u, int span) {
  candidate_triple t;
  t.e = e;
  t.p = p;
  t.u = u;
  t.span = span;
  t.occupied.reserve(e.length + p.length + u.length);
  for (const auto* o : {&e, &p, &u})
    for (int q = o->start; q <= o->last(); ++q) t.occupied.push_back(q);
  std::sort(t.occupied.begin(), t.occupied.end());
  return t;
}

}  // namespace

std::vector<candidate_triple> candidate_triples(
    const std::vector<keyword_occurrence>& occs, double tau) {
  std::vector<keyword_occurrence> by_cat[3];
  for (const auto& o : occs) by_cat[(int)o.cat].push_back(o);
  for (auto& v : by_cat)
    std::sort(v.begin(), v.end(),
              [](const keyword_occurrence& a, const keyword_occurrence& b) {
                return a.start < b.start;
              });

  const auto& es = by_cat[(int)category::economy];
  const auto& ps = by_cat[(int)category::policy];
  const auto& us = by_cat[(int)category::uncertainty];

  std::vector<candidate_triple> out;
  for (const auto& e : es) {
    for (const auto& p : ps) {
      int dep = pairwise_distance(e, p);
      if (dep > tau) {
        if (p.start > e.last()) break;  // sorted: only gets farther
        continue;
      }
      if (overlaps(e, p)) continue;
      for (const auto& u : us) {
        int deu = pairwise_distance(e, u);
        int dpu = pairwise_distance(p, u);
        if (deu > tau || dpu > tau) {
          if (u.start > e.last() && u.start > p.last()) break;
          continue;
        }
        if (overlaps(e, u) || overlaps(p, u)) continue;
        out.push_back(make_triple(e, p, u, std::max({dep, deu, dpu})));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const candidate_triple& a, const candidate_triple& b) {
              if (a.min_pos() != b.min_pos()) return a.min_pos() < b.min_pos();
              return a.occupied < b.occupied;
            });
  return out;
}

triple_selection select_unique_triples(std::vector<candidate_triple> cands) {
  std::sort(cands.begin(), cands.end(),
            [](const candidate_triple& a, const candidate_triple& b) {
              if (a.max_pos() != b.max_pos()) return a.max_pos() < b.max_pos();
              if (a.min_pos() != b.min_pos()) return a.min_pos() < b.min_pos();
              return a.occupied < b.occupied;
            });
  triple_selection sel;
  std::unordered_set<int> used;
  for (auto& c : cands) {
    bool free = true;
    for (int q : c.occupied)
      if (used.contains(q)) {
        free = false;
        break;
      }
    if (!free) continue;
    used.insert(c.occupied.begin(), c.occupied.end());
    sel.selected.push_back(std::move(c));
  }
  sel.count = (int)sel.selected.size();
  return sel;
}

namespace {

// Depth-first maximum over include/exclude decisions, pruned with the
// remaining-candidate bound.
void oracle_rec(const std::vector<std::vector<int>>& occ, size_t i,
                std::unordered_set<int>& used, int depth, int& best) {
  if (depth + (int)(occ.size() - i) <= best) return;
  if (i == occ.size()) {
    best = std::max(best, depth);
    return;
  }
  bool free = true;
  for (int q : occ[i])
    if (used.contains(q)) {
      free = false;
      break;
    }
  if (free) {
    used.insert(occ[i].begin(), occ[i].end());
    oracle_rec(occ, i + 1, used, depth + 1, best);
    for (int q : occ[i]) used.erase(q);
  }
  oracle_rec(occ, i + 1, used, depth, best);
}

}  // namespace

int max_disjoint_oracle(const std::vector<candidate_triple>& cands) {
  if (cands.size() > 24)
    throw data_error(
        "max_disjoint_oracle: instance too large (" +
        std::to_string(cands.size()) +
        " candidates > 24); sample the instance down for exhaustive search");
  std::vector<std::vector<int>> occ;
  occ.reserve(cands.size());
  for (const auto& c : cands) occ.push_back(c.occupied);
  std::unordered_set<int> used;
  int best = 0;
  oracle_rec(occ, 0, used, 0, best);
  return best;
}

int count_unique_triples(const token_vector& tokens, const lexicon& lex,
                         double tau) {
  auto occs = lex.match(tokens);
  if (occs.empty()) return 0;
  return select_unique_triples(candidate_triples(occs, tau)).count;
}

}  // namespace epu
