#include "epu/corpus.hpp"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "epu/errors.hpp"

namespace epu {

namespace {

const icu::Normalizer2* nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr)
    throw data_error("ICU NFC normalizer unavailable");
  return nfc;
}

bool is_apostrophe(UChar32 c) {
  return c == U'\'' || c == U'’';  // straight and typographic
}

bool is_hyphen(UChar32 c) {
  return c == U'-' || c == U'‐' || c == U'‑';
}

bool all_alphabetic(const icu::UnicodeString& s) {
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    if (!u_hasBinaryProperty(c, UCHAR_ALPHABETIC)) return false;
    i += U16_LENGTH(c);
  }
  return s.length() > 0;
}

std::string to_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace

struct tokenizer::impl {
  const icu::Normalizer2* nfc = nullptr;
  std::unique_ptr<icu::BreakIterator> breaker;
  std::unordered_set<std::string> stopwords;
  bool apostrophe_split = true;

  // NFC -> case fold -> NFC. Folding can denormalize, hence the second pass.
  icu::UnicodeString canonical(const icu::UnicodeString& in) const {
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString s = nfc->normalize(in, status);
    s.foldCase(U_FOLD_CASE_DEFAULT);
    s = nfc->normalize(s, status);
    if (U_FAILURE(status)) throw data_error("ICU normalization failed");
    return s;
  }

  // Hyphen-split + alphabetic filter + stop-word filter on one segment.
  void emit_pieces(const icu::UnicodeString& seg, token_vector& out) const {
    int32_t start = 0;
    for (int32_t i = 0; i <= seg.length(); ++i) {
      bool at_end = i == seg.length();
      if (!at_end && !is_hyphen(seg.char32At(i))) continue;
      if (i > start) {
        icu::UnicodeString piece(seg, start, i - start);
        if (all_alphabetic(piece)) {
          std::string tok = to_utf8(piece);
          if (!stopwords.contains(tok)) out.push_back(std::move(tok));
        }
      }
      start = i + 1;
    }
  }
};

tokenizer::tokenizer(std::unordered_set<std::string> stopwords,
                     bool apostrophe_split)
    : impl_(std::make_unique<impl>()) {
  impl_->nfc = nfc_instance();
  UErrorCode status = U_ZERO_ERROR;
  impl_->breaker.reset(
      icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
  if (U_FAILURE(status) || !impl_->breaker)
    throw data_error("ICU word break iterator unavailable");
  impl_->apostrophe_split = apostrophe_split;
  // Re-normalize stop words so file encoding quirks cannot bypass them.
  for (const auto& w : stopwords) {
    std::string n = normalize_word(w);
    if (!n.empty()) impl_->stopwords.insert(std::move(n));
  }
}

tokenizer::tokenizer(const tokenizer_config& cfg)
    : tokenizer(load_stopwords(cfg.stopword_path), cfg.apostrophe_split) {}

tokenizer::~tokenizer() = default;
tokenizer::tokenizer(tokenizer&&) noexcept = default;
tokenizer& tokenizer::operator=(tokenizer&&) noexcept = default;

token_vector tokenizer::tokenize(std::string_view text) const {
  token_vector out;
  if (text.empty()) return out;

  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));

  if (impl_->apostrophe_split) {
    for (int32_t i = 0; i < us.length();) {
      UChar32 c = us.char32At(i);
      if (is_apostrophe(c)) us.replace(i, U16_LENGTH(c), u' ');
      i += U16_LENGTH(c);
    }
  }

  // BreakIterator keeps per-call state; clone so tokenize stays const
  // and thread-safe.
  std::unique_ptr<icu::BreakIterator> brk(impl_->breaker->clone());
  brk->setText(us);
  int32_t start = brk->first();
  for (int32_t end = brk->next(); end != icu::BreakIterator::DONE;
       start = end, end = brk->next()) {
    icu::UnicodeString seg(us, start, end - start);
    impl_->emit_pieces(impl_->canonical(seg), out);
  }
  return out;
}

std::string tokenizer::normalize_word(std::string_view word) const {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(word.data(), static_cast<int32_t>(word.size())));
  icu::UnicodeString n = impl_->canonical(us);
  if (!all_alphabetic(n)) return {};
  return to_utf8(n);
}

bool tokenizer::is_stopword(const std::string& normalized_token) const {
  return impl_->stopwords.contains(normalized_token);
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("stop-word file not found: '" + path + "'");
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(line);
  }
  if (words.empty()) throw data_error("stop-word file is empty: '" + path + "'");
  return words;
}

// ---------------------------------------------------------------------------

struct corpus_reader::impl {
  std::string path;
  std::ifstream in;
  size_t lineno = 0;
  std::unordered_set<std::string> seen_ids;
};

corpus_reader::corpus_reader(const std::string& path)
    : impl_(std::make_unique<impl>()) {
  impl_->path = path;
  impl_->in.open(path);
  if (!impl_->in) throw data_error("corpus file not found: '" + path + "'");
}

corpus_reader::~corpus_reader() = default;

const std::string& corpus_reader::path() const { return impl_->path; }

std::optional<document> corpus_reader::next() {
  std::string line;
  while (std::getline(impl_->in, line)) {
    ++impl_->lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::string where =
        impl_->path + ":" + std::to_string(impl_->lineno);

    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object())
      throw data_error(where + ": malformed record");

    document doc;
    std::string date_str;
    for (auto& [key, value] : rec.items()) {
      if (key == "id" || key == "source" || key == "date" || key == "text") {
        if (!value.is_string())
          throw data_error(where + ": field '" + key + "' must be a string");
        std::string s = value.get<std::string>();
        if (key == "id") doc.id = std::move(s);
        else if (key == "source") doc.source = std::move(s);
        else if (key == "date") date_str = std::move(s);
        else doc.text = std::move(s);
      } else {
        throw data_error(where + ": unexpected field '" + key + "'");
      }
    }
    for (const char* field : {"id", "source", "date", "text"})
      if (!rec.contains(field))
        throw data_error(where + ": missing field '" + field + "'");

    if (doc.id.empty()) throw data_error(where + ": empty id");
    if (doc.source.empty()) throw data_error(where + ": empty source");
    doc.date = parse_date(date_str, where);
    if (doc.date.year < 1800 || doc.date.year > 2100)
      throw data_error(where + ": date out of supported range: '" + date_str +
                       "'");
    if (!impl_->seen_ids.insert(doc.id).second)
      throw data_error(where + ": duplicate document id '" + doc.id + "'");
    return doc;
  }
  return std::nullopt;
}

}  // namespace epu
