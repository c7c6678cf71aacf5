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

#ifndef NOMSUPPORT_TAGGER_H_
#define NOMSUPPORT_TAGGER_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nomsupport/textprep.h"

namespace nomsupport {

// Closed tagset: the noun/verb distinctions the method counts plus what the
// chunker needs.
enum class Tag : uint8_t {
  kNoun,
  kPropn,
  kVerbAct,       // active or infinitival verb
  kVerbProg,      // -ing verb
  kVerbPastPart,  // past participle
  kAux,
  kModal,
  kDet,
  kPoss,
  kPrep,
  kAdj,
  kAdv,
  kPron,
  kConj,
  kNum,
  kPunct,
  kOther,
};

inline constexpr int kNumTags = 17;

std::string_view TagName(Tag tag);
std::optional<Tag> ParseTag(std::string_view name);
inline bool IsVerbTag(Tag t) {
  return t == Tag::kVerbAct || t == Tag::kVerbProg || t == Tag::kVerbPastPart;
}

struct TaggedToken {
  std::string surface;
  std::string lower;
  Tag tag = Tag::kOther;

  friend bool operator==(const TaggedToken &, const TaggedToken &) = default;
};

struct TaggedSentence {
  std::string doc_id;
  int index = 0;
  std::vector<TaggedToken> entries;

  friend bool operator==(const TaggedSentence &,
                         const TaggedSentence &) = default;
};

// Word -> possible tags, most frequent first.
class TagLexicon {
 public:
  // Parses `word<TAB>TAG,TAG,...` lines. Throws InvalidInput on unknown tag
  // names or empty tag lists.
  static TagLexicon Parse(std::string_view text);

  // Uses data/lexicon.tsv.
  static const TagLexicon &Default();

  void Add(std::string word, std::vector<Tag> tags);

  // Empty span if the word is unknown.
  std::span<const Tag> Lookup(std::string_view lower) const;

  size_t size() const { return entries_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, std::vector<Tag>, Hash, std::equal_to<>>
      entries_;
};

// Assigns exactly one tag per token. Known words take their single lexicon
// tag, or are disambiguated by local context (determiner, auxiliary, "to",
// subject pronoun); unknown words fall back to shape and suffix rules.
TaggedSentence TagSentence(const Sentence &sentence, const TagLexicon &lexicon);

// Maps an external tagset onto the internal one. Internal tag names always
// map to themselves; anything unmapped becomes OTHER.
class TagsetMapping {
 public:
  // Parses `ext_tag<TAB>internal_tag` lines.
  static TagsetMapping Parse(std::string_view text);

  // Penn Treebank mapping shipped in data/penn_tagset.tsv.
  static const TagsetMapping &DefaultPenn();

  Tag Map(std::string_view external) const;

 private:
  std::map<std::string, Tag, std::less<>> table_;
};

struct PretaggedInput {
  std::vector<TaggedSentence> sentences;
  int errors = 0;
  std::vector<std::string> messages;
};

// Reads vertical text: one `surface<TAB>tag` per line, blank lines between
// sentences. `#doc<TAB>id<TAB>index` sets the metadata of the following
// sentence; other lines starting with '#' and containing no tab are
// comments. A sentence with a malformed line is skipped and counted.
// Sentences without metadata get doc id `default_doc` and running indices.
// be/have/do forms mapped to a verb tag become AUX when another verb
// follows, as in the baseline tagger.
PretaggedInput ReadPretagged(std::istream &in, const TagsetMapping &mapping,
                             std::string_view default_doc = "-");

// Writes the vertical format read by ReadPretagged, with internal tag names.
void WriteVertical(std::ostream &out, std::span<const TaggedSentence> sentences);

using TagCounts = std::array<int64_t, kNumTags>;

// Occurrences of the filter's forms, by assigned tag.
TagCounts TagDistribution(std::span<const TaggedSentence> sentences,
                          const FormFilter &target);

// Token-level comparison of two taggings of the same sentences, matched by
// (doc_id, index).
struct TagDisagreement {
  int64_t tokens_compared = 0;
  int64_t disagreements = 0;
  int64_t unmatched_sentences = 0;
  std::map<std::pair<Tag, Tag>, int64_t> confusions;
};

TagDisagreement CompareTaggings(std::span<const TaggedSentence> baseline,
                                std::span<const TaggedSentence> reference);

// True for forms of "be" that can head a passive or progressive.
bool IsBeForm(std::string_view lower);

}  // namespace nomsupport

#endif  // NOMSUPPORT_TAGGER_H_
