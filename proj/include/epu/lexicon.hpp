#pragma once

// Three-category keyword dictionary and occurrence matching. Matching is
// exact on normalized tokens; multi-token keywords match only as
// contiguous sequences. All occurrences are reported, including
// overlapping ones; disjointness is resolved later at triple selection.

#include <array>
#include <string>
#include <vector>

#include "epu/corpus.hpp"

namespace epu {

enum class category : int { economy = 0, policy = 1, uncertainty = 2 };

constexpr std::array<category, 3> all_categories = {
    category::economy, category::policy, category::uncertainty};

const char* category_name(category c);

struct keyword {
  category cat;
  std::vector<std::string> tokens;  // normalized, nonempty
};

struct keyword_occurrence {
  category cat;
  int keyword_id;  // index into lexicon::keywords()
  int start;       // first occupied token position
  int length;      // number of occupied positions

  int last() const { return start + length - 1; }
  bool operator==(const keyword_occurrence&) const = default;
};

class lexicon {
 public:
  // Entries must already be normalized; builds the matching automaton.
  // Throws data_error on an empty category or a keyword present in more
  // than one category.
  explicit lexicon(std::vector<keyword> entries);
  ~lexicon();

  lexicon(lexicon&&) noexcept;
  lexicon& operator=(lexicon&&) noexcept;
  lexicon(const lexicon&) = delete;
  lexicon& operator=(const lexicon&) = delete;

  const std::vector<keyword>& keywords() const;
  size_t size() const;

  // All keyword occurrences in the token vector, sorted by
  // (start, category, keyword length). Pure; the lexicon is immutable
  // after construction and shareable across threads.
  std::vector<keyword_occurrence> match(const token_vector& tokens) const;

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

// Loads a lexicon file: a JSON object with string arrays "economy",
// "policy" and "uncertainty". Every entry is normalized through the
// corpus tokenizer; an entry that normalizes to nothing is an error.
lexicon load_lexicon(const std::string& path, const tokenizer& tok);

inline std::vector<keyword_occurrence> match_keywords(
    const token_vector& tokens, const lexicon& lex) {
  return lex.match(tokens);
}

}  // namespace epu
