#include "epu/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <queue>
#include <unordered_map>

#include "epu/errors.hpp"

namespace epu {

const char* category_name(category c) {
  switch (c) {
    case category::economy: return "economy";
    case category::policy: return "policy";
    case category::uncertainty: return "uncertainty";
  }
  return "?";
}

namespace {

std::string join_tokens(const std::vector<std::string>& toks) {
  std::string s;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) s += ' ';
    s += toks[i];
  }
  return s;
}

}  // namespace

// Aho-Corasick over interned token ids. Document tokens outside the
// pattern vocabulary reset the state to the root.
struct lexicon::impl {
  std::vector<keyword> entries;
  std::unordered_map<std::string, int> vocab;

  struct node {
    std::map<int, int> next;
    int fail = 0;
    int out_link = -1;            // nearest suffix node with matches
    std::vector<int> matches;     // keyword ids ending here
  };
  std::vector<node> nodes;

  int intern(const std::string& tok) {
    auto [it, inserted] = vocab.try_emplace(tok, (int)vocab.size());
    return it->second;
  }

  void build() {
    nodes.clear();
    nodes.emplace_back();  // root
    for (size_t k = 0; k < entries.size(); ++k) {
      int cur = 0;
      for (const auto& tok : entries[k].tokens) {
        int sym = intern(tok);
        auto it = nodes[cur].next.find(sym);
        if (it == nodes[cur].next.end()) {
          nodes.emplace_back();
          it = nodes[cur].next.emplace(sym, (int)nodes.size() - 1).first;
        }
        cur = it->second;
      }
      nodes[cur].matches.push_back((int)k);
    }
    // Failure links, breadth-first.
    std::queue<int> q;
    for (auto& [sym, child] : nodes[0].next) {
      nodes[child].fail = 0;
      q.push(child);
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto& [sym, v] : nodes[u].next) {
        int f = nodes[u].fail;
        while (f != 0 && !nodes[f].next.contains(sym)) f = nodes[f].fail;
        auto it = nodes[f].next.find(sym);
        nodes[v].fail = (it != nodes[f].next.end() && it->second != v)
                            ? it->second
                            : 0;
        int ff = nodes[v].fail;
        nodes[v].out_link = nodes[ff].matches.empty() ? nodes[ff].out_link : ff;
        q.push(v);
      }
    }
  }

  int step(int state, int sym) const {
    for (;;) {
      auto it = nodes[state].next.find(sym);
      if (it != nodes[state].next.end()) return it->second;
      if (state == 0) return 0;
      state = nodes[state].fail;
    }
  }
};

lexicon::lexicon(std::vector<keyword> entries)
    : impl_(std::make_unique<impl>()) {
  std::array<int, 3> per_cat = {0, 0, 0};
  std::unordered_map<std::string, category> seen;
  std::vector<keyword> unique;
  for (auto& e : entries) {
    if (e.tokens.empty()) throw data_error("lexicon: empty keyword entry");
    auto key = join_tokens(e.tokens);
    auto [it, inserted] = seen.emplace(key, e.cat);
    if (!inserted) {
      if (it->second != e.cat)
        throw data_error("lexicon: duplicate keyword across categories: '" +
                         key + "'");
      continue;  // same category: entries form a set
    }
    ++per_cat[(int)e.cat];
    unique.push_back(std::move(e));
  }
  for (category c : all_categories)
    if (per_cat[(int)c] == 0)
      throw data_error(std::string("lexicon: category '") + category_name(c) +
                       "' is empty");
  impl_->entries = std::move(unique);
  impl_->build();
}

lexicon::~lexicon() = default;
lexicon::lexicon(lexicon&&) noexcept = default;
lexicon& lexicon::operator=(lexicon&&) noexcept = default;

const std::vector<keyword>& lexicon::keywords() const {
  return impl_->entries;
}

size_t lexicon::size() const { return impl_->entries.size(); }

std::vector<keyword_occurrence> lexicon::match(
    const token_vector& tokens) const {
  std::vector<keyword_occurrence> occs;
  int state = 0;
  for (int pos = 0; pos < (int)tokens.size(); ++pos) {
    auto it = impl_->vocab.find(tokens[pos]);
    if (it == impl_->vocab.end()) {
      state = 0;
      continue;
    }
    state = impl_->step(state, it->second);
    for (int node = state; node != -1;
         node = impl_->nodes[node].out_link) {
      for (int kid : impl_->nodes[node].matches) {
        const keyword& kw = impl_->entries[kid];
        int len = (int)kw.tokens.size();
        occs.push_back({kw.cat, kid, pos - len + 1, len});
      }
    }
  }
  std::sort(occs.begin(), occs.end(),
            [](const keyword_occurrence& a, const keyword_occurrence& b) {
              if (a.start != b.start) return a.start < b.start;
              if (a.cat != b.cat) return (int)a.cat < (int)b.cat;
              if (a.length != b.length) return a.length < b.length;
              return a.keyword_id < b.keyword_id;
            });
  return occs;
}

lexicon load_lexicon(const std::string& path, const tokenizer& tok) {
  std::ifstream in(path);
  if (!in) throw data_error("lexicon file not found: '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw data_error("lexicon file is not a JSON object: '" + path + "'");

  static const std::pair<const char*, category> lists[] = {
      {"economy", category::economy},
      {"policy", category::policy},
      {"uncertainty", category::uncertainty}};

  std::vector<keyword> entries;
  for (auto& [name, cat] : lists) {
    if (!j.contains(name) || !j[name].is_array())
      throw data_error("lexicon: missing list '" + std::string(name) + "'");
    for (const auto& item : j[name]) {
      if (!item.is_string())
        throw data_error("lexicon: non-string entry in '" + std::string(name) +
                         "'");
      std::string raw = item.get<std::string>();
      token_vector toks = tok.tokenize(raw);
      if (toks.empty())
        throw data_error("lexicon: keyword normalizes to empty: '" + raw +
                         "'");
      entries.push_back({cat, std::move(toks)});
    }
  }
  return lexicon(std::move(entries));
}

}  // namespace epu
