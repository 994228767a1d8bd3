#pragma once

// Document ingestion and text-to-token processing.
//
// Tokenization: apostrophes are blanked out so French elided clitics
// ("l'", "d'") become standalone tokens, the text is segmented with the
// Unicode word-boundary rules, and each segment is NFC-normalized,
// case-folded, split at any remaining hyphen, and dropped unless it is
// purely alphabetic and not a stop word.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "epu/dates.hpp"

namespace epu {

struct document {
  std::string id;
  std::string source;
  civil_date date;
  std::string text;
};

using token_vector = std::vector<std::string>;

struct tokenizer_config {
  std::string stopword_path;
  bool apostrophe_split = true;
};

// Loads a one-word-per-line stop-word file (UTF-8, '#' comments). Each
// entry passes through the same normalization as corpus tokens.
// Throws data_error if the file is missing or holds no entries.
std::unordered_set<std::string> load_stopwords(const std::string& path);

class tokenizer {
 public:
  explicit tokenizer(std::unordered_set<std::string> stopwords,
                     bool apostrophe_split = true);
  explicit tokenizer(const tokenizer_config& cfg);
  ~tokenizer();

  tokenizer(tokenizer&&) noexcept;
  tokenizer& operator=(tokenizer&&) noexcept;
  tokenizer(const tokenizer&) = delete;
  tokenizer& operator=(const tokenizer&) = delete;

  // Pure: safe to call concurrently from multiple threads.
  token_vector tokenize(std::string_view text) const;

  // NFC + case fold of a single word; empty result if the input is not
  // purely alphabetic after normalization. Used for stop words and
  // lexicon entries so everything meets in one canonical form.
  std::string normalize_word(std::string_view word) const;

  bool is_stopword(const std::string& normalized_token) const;

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

// Streaming reader over a newline-delimited corpus file: one JSON record
// per line with exactly the keys id, source, date, text. Single consumer;
// documents come back in file order.
class corpus_reader {
 public:
  explicit corpus_reader(const std::string& path);
  ~corpus_reader();

  corpus_reader(const corpus_reader&) = delete;
  corpus_reader& operator=(const corpus_reader&) = delete;

  // nullopt at end of file. Throws data_error naming the line on any
  // malformed record, duplicate id, or out-of-range date.
  std::optional<document> next();

  const std::string& path() const;

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

}  // namespace epu
