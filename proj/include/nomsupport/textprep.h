// Copyright 2026 The Nomsupport Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOMSUPPORT_TEXTPREP_H_
#define NOMSUPPORT_TEXTPREP_H_

#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nomsupport/morphology.h"

namespace nomsupport {

// One article of the corpus. Ids are unique within a run.
struct Document {
  std::string id;
  std::string text;
};

struct DocumentError {
  std::string id;
  std::string message;
};

struct SegmentOptions {
  // When non-empty, a line equal to this (ignoring surrounding whitespace)
  // separates documents within a file. Otherwise each file is a document.
  std::string delimiter;
  // Remove <...> markup before segmentation.
  bool strip_tags = false;
};

// Splits one input text into documents. With a delimiter the ids are
// "<source_id>#<n>" (1-based); without, the id is `source_id`. Delimiter
// lines are dropped and whitespace-only documents are skipped. A document
// that is not valid UTF-8 is reported in `errors` and left out.
std::vector<Document> SegmentText(std::string_view source_id,
                                  std::string_view text,
                                  const SegmentOptions &options,
                                  std::vector<DocumentError> *errors);

// Segments files and directory trees. Files named directly are identified by
// their file name; files found under a directory by their path relative to
// it. Directory contents are visited in sorted order. Throws IoError for a
// missing path and ConfigError for a duplicate document id.
std::vector<Document> SegmentPaths(std::span<const std::filesystem::path> paths,
                                   const SegmentOptions &options,
                                   std::vector<DocumentError> *errors);

// Trivial markup removal: drops <tag ...> and </tag> spans.
std::string StripTags(std::string_view text);

struct Token {
  std::string surface;
  std::string lower;
  // True when no whitespace separated this token from the previous one.
  bool joined = false;

  friend bool operator==(const Token &, const Token &) = default;
};

struct Sentence {
  std::string doc_id;
  int index = 0;
  std::vector<Token> tokens;
};

Token MakeToken(std::string_view surface, bool joined = false);

// Rule-based sentence splitter and tokenizer driven by an abbreviation list.
class Tokenizer {
 public:
  explicit Tokenizer(std::set<std::string> abbreviations);

  // Uses data/abbreviations.txt.
  static const Tokenizer &Default();

  static std::set<std::string> ParseAbbreviations(std::string_view text);

  // Splits at . ! ? (plus any closing quotes or brackets) followed by
  // whitespace and an uppercase letter or opening quote, and at blank lines.
  // Abbreviations and single-letter initials do not end a sentence.
  std::vector<std::string> SplitSentences(std::string_view text) const;

  // Whitespace split, then leading and trailing punctuation detached.
  // Internal punctuation stays ("U.S.-backed"), as do clitic 's and the
  // plural possessive apostrophe ("appeals'").
  std::vector<Token> Tokenize(std::string_view sentence) const;

  // SplitSentences + Tokenize, indexed from 0 within the document.
  std::vector<Sentence> Sentences(const Document &doc) const;

  // `word` is lowercase and includes its final period.
  bool IsAbbreviation(std::string_view word) const;

 private:
  bool KeepsFinalPeriod(std::string_view word) const;

  std::set<std::string, std::less<>> abbreviations_;
};

// Inverse of Tokenize up to whitespace: tokens joined by single spaces,
// except those marked `joined`.
std::string Detokenize(std::span<const Token> tokens);

// Collapses whitespace runs to one space and trims the ends.
std::string NormalizeWhitespace(std::string_view text);

// Union of word-form sets matched against lowercased tokens.
class FormFilter {
 public:
  FormFilter() = default;
  explicit FormFilter(std::span<const WordFormSet> sets);

  void Add(const WordFormSet &set);
  void Add(std::string form) { forms_.insert(std::move(form)); }

  bool empty() const { return forms_.empty(); }
  bool Contains(std::string_view lower) const {
    return forms_.find(lower) != forms_.end();
  }
  bool Matches(std::span<const Token> tokens) const;
  const std::set<std::string, std::less<>> &forms() const { return forms_; }

 private:
  std::set<std::string, std::less<>> forms_;
};

// Keeps the sentences with at least one token equal to a filter form (case
// insensitive, whole tokens only). Throws InvalidInput on an empty filter.
std::vector<Sentence> FilterSentences(std::span<const Sentence> sentences,
                                      const FormFilter &filter);

// Filter-stage file: header line, then doc_id<TAB>index<TAB>space-separated
// tokens.
void WriteSentences(std::ostream &out, std::span<const Sentence> sentences);
std::vector<Sentence> ReadSentences(std::istream &in);

}  // namespace nomsupport

#endif  // NOMSUPPORT_TEXTPREP_H_
