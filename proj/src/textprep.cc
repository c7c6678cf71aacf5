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

#include "nomsupport/textprep.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

bool IsOpeningPunct(char c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == '{' ||
         c == '`';
}

bool IsClosingPunct(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

bool IsTrailingPunct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' ||
         c == '?' || IsClosingPunct(c);
}

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

std::vector<Document> SegmentText(std::string_view source_id,
                                  std::string_view text,
                                  const SegmentOptions &options,
                                  std::vector<DocumentError> *errors) {
  std::string stripped;
  if (options.strip_tags) {
    stripped = StripTags(text);
    text = stripped;
  }
  std::vector<std::string> parts;
  if (options.delimiter.empty()) {
    parts.emplace_back(text);
  } else {
    std::string current;
    std::string_view rest = text;
    while (!rest.empty()) {
      size_t eol = rest.find('\n');
      std::string_view line =
          rest.substr(0, eol == std::string_view::npos ? rest.size() : eol + 1);
      rest.remove_prefix(line.size());
      if (Trim(line) == options.delimiter) {
        parts.push_back(std::move(current));
        current.clear();
      } else {
        current += line;
      }
    }
    parts.push_back(std::move(current));
  }

  std::vector<Document> docs;
  int ordinal = 0;
  for (std::string &part : parts) {
    if (Trim(part).empty()) continue;
    ++ordinal;
    std::string id(source_id);
    if (!options.delimiter.empty()) id += "#" + std::to_string(ordinal);
    if (!IsValidUtf8(part)) {
      if (errors != nullptr) errors->push_back({id, "invalid UTF-8"});
      continue;
    }
    docs.push_back({std::move(id), std::move(part)});
  }
  return docs;
}

std::vector<Document> SegmentPaths(std::span<const std::filesystem::path> paths,
                                   const SegmentOptions &options,
                                   std::vector<DocumentError> *errors) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, fs::path>> files;
  for (const fs::path &path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<std::pair<std::string, fs::path>> found;
      for (const auto &entry : fs::recursive_directory_iterator(path)) {
        if (!entry.is_regular_file()) continue;
        found.emplace_back(
            fs::relative(entry.path(), path).generic_string(), entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(path, ec)) {
      files.emplace_back(path.filename().string(), path);
    } else {
      throw IoError("no such corpus file or directory: " + path.string());
    }
  }
  std::vector<Document> docs;
  std::set<std::string> seen;
  for (const auto &[id, path] : files) {
    for (Document &doc : SegmentText(id, ReadFile(path), options, errors)) {
      if (!seen.insert(doc.id).second) {
        throw ConfigError("duplicate document id " + doc.id);
      }
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

std::string StripTags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '<' && i + 1 < text.size() &&
        (IsAsciiAlpha(text[i + 1]) || text[i + 1] == '/' ||
         text[i + 1] == '!')) {
      size_t close = text.find('>', i);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    out += text[i++];
  }
  return out;
}

Token MakeToken(std::string_view surface, bool joined) {
  return Token{std::string(surface), ToLower(surface), joined};
}

Tokenizer::Tokenizer(std::set<std::string> abbreviations)
    : abbreviations_(abbreviations.begin(), abbreviations.end()) {}

const Tokenizer &Tokenizer::Default() {
  static const Tokenizer *tokenizer =
      new Tokenizer(ParseAbbreviations(EmbeddedData("abbreviations.txt")));
  return *tokenizer;
}

std::set<std::string> Tokenizer::ParseAbbreviations(std::string_view text) {
  std::set<std::string> words;
  ForEachDataLine(text, [&](int, std::string_view line) {
    words.insert(ToLower(Trim(line)));
  });
  return words;
}

bool Tokenizer::IsAbbreviation(std::string_view word) const {
  return abbreviations_.find(word) != abbreviations_.end();
}

bool Tokenizer::KeepsFinalPeriod(std::string_view word) const {
  if (word.size() < 2 || word.back() != '.') return false;
  std::string lower = ToLower(word);
  if (IsAbbreviation(lower)) return true;
  // Initials ("J.") and dotted acronyms ("U.S.", "a.m.").
  if (word.size() == 2 && IsAsciiAlpha(word[0])) return true;
  std::string_view body = word.substr(0, word.size() - 1);
  return body.find('.') != std::string_view::npos &&
         std::all_of(body.begin(), body.end(),
                     [](char c) { return IsAsciiAlpha(c) || c == '.'; });
}

std::vector<std::string> Tokenizer::SplitSentences(std::string_view text) const {
  std::vector<std::string> sentences;
  auto emit = [&](std::string_view s) {
    s = Trim(s);
    if (!s.empty()) sentences.emplace_back(s);
  };

  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      // Blank line: paragraph boundary.
      size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' ||
                                 text[j] == '\r')) {
        ++j;
      }
      if (j < text.size() && text[j] == '\n') {
        emit(text.substr(start, i - start));
        start = i = j;
        continue;
      }
      ++i;
      continue;
    }
    if (!IsTerminal(c)) {
      ++i;
      continue;
    }
    size_t end = i + 1;
    while (end < text.size() && IsTerminal(text[end])) ++end;
    while (end < text.size() && IsClosingPunct(text[end])) ++end;
    size_t next = end;
    while (next < text.size() && IsSpace(text[next])) ++next;
    bool boundary = false;
    if (next > end && next < text.size()) {
      char n = text[next];
      boundary = IsAsciiUpper(n) || n == '"' || n == '\'' || n == '`' ||
                 n == '(' || n == '[';
    }
    if (boundary && c == '.' && end == i + 1) {
      size_t w = i;
      while (w > start && !IsSpace(text[w - 1])) --w;
      while (w < i && IsOpeningPunct(text[w])) ++w;
      if (KeepsFinalPeriod(text.substr(w, i + 1 - w))) boundary = false;
    }
    if (boundary) {
      emit(text.substr(start, end - start));
      start = end;
    }
    i = end;
  }
  emit(text.substr(start));
  return sentences;
}

std::vector<Token> Tokenizer::Tokenize(std::string_view sentence) const {
  std::vector<Token> tokens;
  for (std::string_view chunk : SplitWhitespace(sentence)) {
    bool joined = false;
    auto push = [&](std::string_view piece) {
      tokens.push_back(MakeToken(piece, joined));
      joined = true;
    };
    while (chunk.size() > 1 && IsOpeningPunct(chunk.front())) {
      push(chunk.substr(0, 1));
      chunk.remove_prefix(1);
    }
    std::vector<std::string_view> trailing;
    while (!chunk.empty() && IsTrailingPunct(chunk.back())) {
      char last = chunk.back();
      if (chunk.size() == 1) break;
      if (last == '\'' && (chunk[chunk.size() - 2] == 's' ||
                           chunk[chunk.size() - 2] == 'S')) {
        break;
      }
      if (last == '.') {
        if (chunk.size() >= 3 && chunk.ends_with("...")) {
          trailing.push_back(chunk.substr(chunk.size() - 3));
          chunk.remove_suffix(3);
          continue;
        }
        if (KeepsFinalPeriod(chunk)) break;
      }
      trailing.push_back(chunk.substr(chunk.size() - 1));
      chunk.remove_suffix(1);
    }
    if (!chunk.empty()) push(chunk);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) push(*it);
  }
  return tokens;
}

std::vector<Sentence> Tokenizer::Sentences(const Document &doc) const {
  std::vector<Sentence> out;
  for (const std::string &raw : SplitSentences(doc.text)) {
    std::vector<Token> tokens = Tokenize(raw);
    if (tokens.empty()) continue;
    out.push_back({doc.id, static_cast<int>(out.size()), std::move(tokens)});
  }
  return out;
}

std::string Detokenize(std::span<const Token> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !tokens[i].joined) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::vector<std::string> words;
  for (std::string_view w : SplitWhitespace(text)) words.emplace_back(w);
  return Join(words, " ");
}

FormFilter::FormFilter(std::span<const WordFormSet> sets) {
  for (const WordFormSet &set : sets) Add(set);
}

void FormFilter::Add(const WordFormSet &set) {
  forms_.insert(set.forms.begin(), set.forms.end());
}

bool FormFilter::Matches(std::span<const Token> tokens) const {
  return std::any_of(tokens.begin(), tokens.end(),
                     [&](const Token &t) { return Contains(t.lower); });
}

std::vector<Sentence> FilterSentences(std::span<const Sentence> sentences,
                                      const FormFilter &filter) {
  if (filter.empty()) throw InvalidInput("empty word-form filter");
  std::vector<Sentence> kept;
  for (const Sentence &s : sentences) {
    if (filter.Matches(s.tokens)) kept.push_back(s);
  }
  return kept;
}

void WriteSentences(std::ostream &out, std::span<const Sentence> sentences) {
  out << "doc_id\tindex\ttokens\n";
  for (const Sentence &s : sentences) {
    out << s.doc_id << '\t' << s.index << '\t';
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (i > 0) out << ' ';
      out << s.tokens[i].surface;
    }
    out << '\n';
  }
}

std::vector<Sentence> ReadSentences(std::istream &in) {
  std::vector<Sentence> sentences;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1 || line.empty()) continue;
    auto fields = Split(line, '\t');
    auto index = fields.size() == 3 ? ParseInt<int>(fields[1]) : std::nullopt;
    if (!index) {
      throw InvalidInput("sentence file line " + std::to_string(number) +
                         ": expected doc_id<TAB>index<TAB>tokens");
    }
    Sentence s{std::string(fields[0]), *index, {}};
    for (std::string_view tok : SplitWhitespace(fields[2])) {
      s.tokens.push_back(MakeToken(tok));
    }
    sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace nomsupport
