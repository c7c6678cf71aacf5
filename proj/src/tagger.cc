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

#include "nomsupport/tagger.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

constexpr std::string_view kTagNames[kNumTags] = {
    "NOUN", "PROPN", "VERB_ACT", "VERB_PROG", "VERB_PASTPART", "AUX",
    "MODAL", "DET", "POSS", "PREP", "ADJ", "ADV", "PRON", "CONJ", "NUM",
    "PUNCT", "OTHER"};

bool Has(std::span<const Tag> tags, Tag t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

bool HasVerb(std::span<const Tag> tags) {
  return std::any_of(tags.begin(), tags.end(), IsVerbTag);
}

bool IsSubjectPronoun(std::string_view w) {
  return w == "i" || w == "you" || w == "he" || w == "she" || w == "it" ||
         w == "we" || w == "they";
}

bool IsHaveOrDoForm(std::string_view w) {
  return w == "have" || w == "has" || w == "had" || w == "having" ||
         w == "do" || w == "does" || w == "did";
}

bool IsDoForm(std::string_view w) {
  return w == "do" || w == "does" || w == "did";
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsPossessiveShape(std::string_view w) {
  return (EndsWith(w, "'s") || EndsWith(w, "s'")) && w.size() > 2;
}

bool IsPunctuation(std::string_view w) {
  return std::none_of(w.begin(), w.end(), [](char c) {
    return IsAsciiAlpha(c) || IsAsciiDigit(c) ||
           static_cast<unsigned char>(c) >= 0x80;
  });
}

// Tags an unknown word could receive, for look-ahead only.
std::vector<Tag> GuessTags(std::string_view surface, std::string_view lower,
                           bool initial) {
  if (IsPunctuation(lower)) return {Tag::kPunct};
  if (std::any_of(lower.begin(), lower.end(), IsAsciiDigit)) return {Tag::kNum};
  if (IsPossessiveShape(lower)) return {Tag::kPoss};
  if (!initial && IsAsciiUpper(surface[0])) return {Tag::kPropn};
  if (EndsWith(lower, "ing")) return {Tag::kVerbProg, Tag::kNoun};
  if (EndsWith(lower, "ed")) return {Tag::kVerbAct, Tag::kVerbPastPart};
  return {Tag::kNoun};
}

class SentenceTagger {
 public:
  SentenceTagger(const Sentence &sentence, const TagLexicon &lexicon)
      : tokens_(sentence.tokens), lexicon_(lexicon) {}

  std::vector<Tag> Run() {
    tags_.reserve(tokens_.size());
    for (size_t i = 0; i < tokens_.size(); ++i) {
      std::span<const Tag> candidates = lexicon_.Lookup(tokens_[i].lower);
      Tag tag;
      if (candidates.empty()) {
        tag = Unknown(i);
      } else if (candidates.size() == 1) {
        tag = candidates[0];
      } else {
        tag = Resolve(i, candidates);
      }
      tags_.push_back(IsPrenominalParticiple(i, tag) ? Tag::kAdj : tag);
    }
    return std::move(tags_);
  }

 private:
  std::vector<Tag> Candidates(size_t i) const {
    std::span<const Tag> known = lexicon_.Lookup(tokens_[i].lower);
    if (!known.empty()) return {known.begin(), known.end()};
    return GuessTags(tokens_[i].surface, tokens_[i].lower, i == 0);
  }

  // Tag of the closest preceding non-adverb, if any.
  std::optional<size_t> PreviousNonAdverb(size_t i) const {
    while (i > 0) {
      --i;
      if (tags_[i] != Tag::kAdv) return i;
    }
    return std::nullopt;
  }

  std::optional<size_t> NextNonAdverb(size_t i) const {
    for (size_t j = i + 1; j < tokens_.size(); ++j) {
      auto c = Candidates(j);
      if (c.empty() || c.front() != Tag::kAdv) return j;
    }
    return std::nullopt;
  }

  bool AfterAux(size_t i, bool be_only) const {
    auto p = PreviousNonAdverb(i);
    if (!p || tags_[*p] != Tag::kAux) return false;
    return !be_only || IsBeForm(tokens_[*p].lower);
  }

  bool AfterDeterminerLike(size_t i) const {
    if (i == 0) return false;
    Tag prev = tags_[i - 1];
    return prev == Tag::kDet || prev == Tag::kPoss || prev == Tag::kAdj;
  }

  // "an ailing leader", "her ousted predecessor".
  bool IsPrenominalParticiple(size_t i, Tag tag) const {
    if (!IsVerbTag(tag) || !AfterDeterminerLike(i)) return false;
    if (tag == Tag::kVerbAct && !EndsWith(tokens_[i].lower, "ed")) return false;
    if (i + 1 >= tokens_.size()) return false;
    auto next = Candidates(i + 1);
    return Has(next, Tag::kNoun) || Has(next, Tag::kPropn);
  }

  Tag Resolve(size_t i, std::span<const Tag> candidates) {
    const bool verb = HasVerb(candidates);
    // have/do: auxiliary before another verb, main verb otherwise.
    if (Has(candidates, Tag::kAux) && verb) {
      auto next = NextNonAdverb(i);
      if (next) {
        auto c = Candidates(*next);
        if (HasVerb(c) || Has(c, Tag::kAux)) return Tag::kAux;
      }
      for (Tag t : candidates) {
        if (IsVerbTag(t)) return t;
      }
    }
    if (Has(candidates, Tag::kNoun) && verb) {
      if (AfterDeterminerLike(i)) return Tag::kNoun;
      if (AfterAux(i, /*be_only=*/true)) {
        if (Has(candidates, Tag::kVerbProg)) return Tag::kVerbProg;
        if (Has(candidates, Tag::kVerbPastPart)) return Tag::kVerbPastPart;
      }
      if (auto p = PreviousNonAdverb(i); p && Has(candidates, Tag::kVerbAct)) {
        // "will appeal", "did not appeal".
        if (tags_[*p] == Tag::kModal) return Tag::kVerbAct;
        if (tags_[*p] == Tag::kAux && IsDoForm(tokens_[*p].lower)) {
          return Tag::kVerbAct;
        }
      }
      if (AfterAux(i, /*be_only=*/false) &&
          Has(candidates, Tag::kVerbPastPart)) {
        return Tag::kVerbPastPart;
      }
      if (i > 0 && tokens_[i - 1].lower == "to" &&
          Has(candidates, Tag::kVerbAct)) {
        return Tag::kVerbAct;
      }
      if (i > 0 && tags_[i - 1] == Tag::kPron &&
          IsSubjectPronoun(tokens_[i - 1].lower) &&
          Has(candidates, Tag::kVerbAct)) {
        return Tag::kVerbAct;
      }
      // Sentence-initial imperative before an object.
      if (i == 0 && Has(candidates, Tag::kVerbAct) && tokens_.size() > 1) {
        auto next = Candidates(1);
        if (Has(next, Tag::kDet) || Has(next, Tag::kPoss)) {
          return Tag::kVerbAct;
        }
      }
      return candidates[0];
    }
    if (Has(candidates, Tag::kVerbAct) &&
        Has(candidates, Tag::kVerbPastPart)) {
      if (AfterAux(i, /*be_only=*/false)) return Tag::kVerbPastPart;
      return candidates[0];
    }
    if (Has(candidates, Tag::kAdj) && Has(candidates, Tag::kNoun) && !verb) {
      // Prenominal use is adjectival.
      if (i + 1 < tokens_.size()) {
        auto next = Candidates(i + 1);
        if (Has(next, Tag::kNoun) || Has(next, Tag::kAdj) ||
            Has(next, Tag::kPropn)) {
          return Tag::kAdj;
        }
      }
      return Tag::kNoun;
    }
    return candidates[0];
  }

  Tag Unknown(size_t i) const {
    const std::string &surface = tokens_[i].surface;
    const std::string &w = tokens_[i].lower;
    if (IsPunctuation(w)) return Tag::kPunct;
    if (std::any_of(w.begin(), w.end(), IsAsciiDigit)) return Tag::kNum;
    if (IsPossessiveShape(w)) return Tag::kPoss;
    if (i > 0 && IsAsciiUpper(surface[0])) return Tag::kPropn;
    if (EndsWith(w, "ing")) {
      return AfterDeterminerLike(i) ? Tag::kNoun : Tag::kVerbProg;
    }
    if (EndsWith(w, "ed")) {
      return AfterAux(i, /*be_only=*/false) ? Tag::kVerbPastPart
                                            : Tag::kVerbAct;
    }
    return Tag::kNoun;
  }

  const std::vector<Token> &tokens_;
  const TagLexicon &lexicon_;
  std::vector<Tag> tags_;
};

void NormalizeAuxiliaries(std::vector<TaggedToken> &entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    TaggedToken &e = entries[i];
    if (!IsVerbTag(e.tag)) continue;
    if (IsBeForm(e.lower)) {
      e.tag = Tag::kAux;
      continue;
    }
    if (!IsHaveOrDoForm(e.lower)) continue;
    for (size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[j].tag == Tag::kAdv) continue;
      if (IsVerbTag(entries[j].tag)) e.tag = Tag::kAux;
      break;
    }
  }
}

}  // namespace

std::string_view TagName(Tag tag) {
  return kTagNames[static_cast<int>(tag)];
}

std::optional<Tag> ParseTag(std::string_view name) {
  for (int i = 0; i < kNumTags; ++i) {
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

bool IsBeForm(std::string_view w) {
  return w == "be" || w == "is" || w == "am" || w == "are" || w == "was" ||
         w == "were" || w == "been" || w == "being" || w == "'s" ||
         w == "'re" || w == "'m";
}

TagLexicon TagLexicon::Parse(std::string_view text) {
  TagLexicon lexicon;
  ForEachDataLine(text, [&](int line, std::string_view row) {
    auto fields = Split(row, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw InvalidInput("lexicon line " + std::to_string(line) +
                         ": expected word<TAB>tags");
    }
    std::vector<Tag> tags;
    for (std::string_view name : Split(fields[1], ',')) {
      auto tag = ParseTag(Trim(name));
      if (!tag) {
        throw InvalidInput("lexicon line " + std::to_string(line) +
                           ": unknown tag " + std::string(name));
      }
      tags.push_back(*tag);
    }
    lexicon.Add(ToLower(fields[0]), std::move(tags));
  });
  return lexicon;
}

const TagLexicon &TagLexicon::Default() {
  static const TagLexicon *lexicon =
      new TagLexicon(Parse(EmbeddedData("lexicon.tsv")));
  return *lexicon;
}

void TagLexicon::Add(std::string word, std::vector<Tag> tags) {
  if (tags.empty()) {
    throw InvalidInput("lexicon entry for \"" + word + "\" has no tags");
  }
  entries_[std::move(word)] = std::move(tags);
}

std::span<const Tag> TagLexicon::Lookup(std::string_view lower) const {
  auto it = entries_.find(lower);
  if (it == entries_.end()) return {};
  return it->second;
}

TaggedSentence TagSentence(const Sentence &sentence, const TagLexicon &lexicon) {
  std::vector<Tag> tags = SentenceTagger(sentence, lexicon).Run();
  TaggedSentence out{sentence.doc_id, sentence.index, {}};
  out.entries.reserve(tags.size());
  for (size_t i = 0; i < tags.size(); ++i) {
    out.entries.push_back(
        {sentence.tokens[i].surface, sentence.tokens[i].lower, tags[i]});
  }
  return out;
}

TagsetMapping TagsetMapping::Parse(std::string_view text) {
  TagsetMapping mapping;
  ForEachDataLine(text, [&](int line, std::string_view row) {
    auto fields = Split(row, '\t');
    std::optional<Tag> tag;
    if (fields.size() == 2) tag = ParseTag(Trim(fields[1]));
    if (!tag) {
      throw InvalidInput("tagset mapping line " + std::to_string(line) +
                         ": expected ext_tag<TAB>internal_tag");
    }
    mapping.table_[std::string(fields[0])] = *tag;
  });
  return mapping;
}

const TagsetMapping &TagsetMapping::DefaultPenn() {
  static const TagsetMapping *mapping =
      new TagsetMapping(Parse(EmbeddedData("penn_tagset.tsv")));
  return *mapping;
}

Tag TagsetMapping::Map(std::string_view external) const {
  auto it = table_.find(external);
  if (it != table_.end()) return it->second;
  return ParseTag(external).value_or(Tag::kOther);
}

PretaggedInput ReadPretagged(std::istream &in, const TagsetMapping &mapping,
                             std::string_view default_doc) {
  PretaggedInput result;
  TaggedSentence current;
  bool has_meta = false;
  bool malformed = false;
  int running_index = 0;
  int line_number = 0;

  auto finish = [&] {
    if (malformed) {
      ++result.errors;
    } else if (!current.entries.empty()) {
      if (!has_meta) {
        current.doc_id = std::string(default_doc);
        current.index = running_index++;
      }
      NormalizeAuxiliaries(current.entries);
      result.sentences.push_back(std::move(current));
    }
    current = TaggedSentence();
    has_meta = false;
    malformed = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish();
      continue;
    }
    if (line.rfind("#doc\t", 0) == 0) {
      auto fields = Split(line, '\t');
      auto index = fields.size() == 3 ? ParseInt<int>(fields[2]) : std::nullopt;
      if (!index || fields[1].empty()) {
        malformed = true;
        result.messages.push_back("line " + std::to_string(line_number) +
                                  ": bad #doc line");
        continue;
      }
      current.doc_id = std::string(fields[1]);
      current.index = *index;
      has_meta = true;
      continue;
    }
    if (line[0] == '#' && line.find('\t') == std::string::npos) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      malformed = true;
      result.messages.push_back("line " + std::to_string(line_number) +
                                ": expected surface<TAB>tag");
      continue;
    }
    current.entries.push_back({std::string(fields[0]), ToLower(fields[0]),
                               mapping.Map(fields[1])});
  }
  finish();
  return result;
}

void WriteVertical(std::ostream &out,
                   std::span<const TaggedSentence> sentences) {
  out << "# nomsupport vertical: surface tag\n";
  for (const TaggedSentence &s : sentences) {
    out << "#doc\t" << s.doc_id << '\t' << s.index << '\n';
    for (const TaggedToken &e : s.entries) {
      out << e.surface << '\t' << TagName(e.tag) << '\n';
    }
    out << '\n';
  }
}

TagCounts TagDistribution(std::span<const TaggedSentence> sentences,
                          const FormFilter &target) {
  TagCounts counts{};
  for (const TaggedSentence &s : sentences) {
    for (const TaggedToken &e : s.entries) {
      if (target.Contains(e.lower)) ++counts[static_cast<int>(e.tag)];
    }
  }
  return counts;
}

TagDisagreement CompareTaggings(std::span<const TaggedSentence> baseline,
                                std::span<const TaggedSentence> reference) {
  std::map<std::pair<std::string_view, int>, const TaggedSentence *> by_key;
  for (const TaggedSentence &s : reference) by_key[{s.doc_id, s.index}] = &s;
  TagDisagreement result;
  for (const TaggedSentence &s : baseline) {
    auto it = by_key.find({s.doc_id, s.index});
    if (it == by_key.end() ||
        it->second->entries.size() != s.entries.size()) {
      ++result.unmatched_sentences;
      continue;
    }
    for (size_t i = 0; i < s.entries.size(); ++i) {
      Tag a = s.entries[i].tag;
      Tag b = it->second->entries[i].tag;
      ++result.tokens_compared;
      if (a != b) {
        ++result.disagreements;
        ++result.confusions[{a, b}];
      }
    }
  }
  return result;
}

}  // namespace nomsupport
