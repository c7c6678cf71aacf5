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

#ifndef NOMSUPPORT_SHALLOWPARSE_H_
#define NOMSUPPORT_SHALLOWPARSE_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nomsupport/morphology.h"
#include "nomsupport/tagger.h"

namespace nomsupport {

enum class ChunkKind { kNP, kVG, kPP };
enum class Voice { kNone, kActive, kPassive, kProgressive, kInfinitival };

std::string_view ChunkKindName(ChunkKind kind);
std::string_view VoiceName(Voice voice);

// Half-open token range [begin, end).
struct Span {
  int begin = -1;
  int end = -1;

  bool valid() const { return begin >= 0 && end > begin; }
  friend bool operator==(const Span &, const Span &) = default;
  friend auto operator<=>(const Span &, const Span &) = default;
};

// A non-recursive phrase. For a PP, `head` is the head of the embedded NP,
// `prep` the lowercased preposition and `np` the embedded NP's span.
struct Chunk {
  ChunkKind kind = ChunkKind::kNP;
  Span span;
  int head = -1;
  std::string head_surface;
  std::string head_lemma;
  Voice voice = Voice::kNone;
  std::string prep;
  Span np;
};

// Memoizes head lemmatization, which dominates chunking cost. Not
// thread-safe; use one per worker.
class LemmaCache {
 public:
  explicit LemmaCache(const Morphology &morph) : morph_(morph) {}

  // Lemma of a lowercased form; the form itself when none is recoverable.
  const std::string &Get(const std::string &lower, PartOfSpeech pos);

  const Morphology &morphology() const { return morph_; }

 private:
  const Morphology &morph_;
  std::unordered_map<std::string, std::string> verbs_;
  std::unordered_map<std::string, std::string> nouns_;
};

// Longest-match chunking, left to right:
//   NP = (DET|POSS)? (ADJ|NOUN|PROPN|NUM)* (NOUN|PROPN), head = last noun
//   VG = (MODAL|AUX) (MODAL|AUX|ADV)* VERB | VERB, head = the verb
//   PP = PREP NP
// Tokens matching no pattern stay unchunked.
std::vector<Chunk> ChunkSentence(const TaggedSentence &sentence,
                                 LemmaCache &lemmas);
std::vector<Chunk> ChunkSentence(const TaggedSentence &sentence,
                                 const Morphology &morph);

enum class RelationKind { kDobj, kVpp, kNpp, kNgen };

std::string_view RelationKindName(RelationKind kind);
std::optional<RelationKind> ParseRelationKind(std::string_view name);

struct Relation {
  RelationKind kind = RelationKind::kDobj;
  std::string governor;
  std::string prep;  // empty for DOBJ and NGEN
  std::string dependent;
  std::string doc_id;
  int sent_index = 0;
  // Token spans of the governor chunk (the embedded NP for a PP governor)
  // and the dependent NP. Invalid when read from a dump without spans.
  Span governor_span;
  Span dependent_span;

  friend bool operator==(const Relation &, const Relation &) = default;
};

struct ParseOptions {
  // Maximum number of NPs between a verb group and a PP it governs.
  int vpp_window = 1;
};

// DOBJ: NP right after an active or infinitival VG (adverbs may intervene).
// VPP: first PP after a non-passive VG, possibly past up to vpp_window NPs;
//      "by" PPs are dropped.
// NPP: PP strictly adjacent to an NP, or to a preceding PP (attaching to
//      that PP's NP). NGEN accompanies every "of" NPP.
std::vector<Relation> ExtractRelations(std::span<const Chunk> chunks,
                                       const TaggedSentence &sentence,
                                       const ParseOptions &options = {});

// Chunks and extracts over all sentences, in sentence order.
std::vector<Relation> ParseSentences(std::span<const TaggedSentence> sentences,
                                     const Morphology &morph,
                                     const ParseOptions &options = {},
                                     int threads = 1);

inline constexpr std::string_view kRelationHeader =
    "kind\tgovernor\tprep\tdependent\tdoc_id\tsent_index\tgovernor_span\t"
    "dependent_span";

void WriteRelations(std::ostream &out, std::span<const Relation> relations);

// Accepts the 8-column format written above and the 6-column format
// without spans. Throws InvalidInput on malformed rows.
std::vector<Relation> ReadRelations(std::istream &in);

}  // namespace nomsupport

#endif  // NOMSUPPORT_SHALLOWPARSE_H_
