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

#ifndef NOMSUPPORT_PROFILER_H_
#define NOMSUPPORT_PROFILER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomsupport/morphology.h"
#include "nomsupport/shallowparse.h"
#include "nomsupport/tagger.h"

namespace nomsupport {

// Profiles built from fewer relations than this are flagged in reports.
inline constexpr int64_t kLowEvidenceThreshold = 5;

enum class ProfileRole { kVerbal, kNominal };

std::string_view ProfileRoleName(ProfileRole role);

// Preposition frequencies of PPs attached to one lemma.
struct PrepProfile {
  std::string target;
  ProfileRole role = ProfileRole::kVerbal;
  std::map<std::string, int64_t> counts;
  int64_t total = 0;

  void Add(const std::string &prep, int64_t n = 1);
  bool empty() const { return total == 0; }
  bool low_confidence() const { return total < kLowEvidenceThreshold; }
  int64_t CountOf(std::string_view prep) const;
  // Entries by count descending, ties by preposition.
  std::vector<std::pair<std::string, int64_t>> Sorted() const;
};

// VPP relations governed by `verb`.
PrepProfile VerbPrepProfile(std::span<const Relation> relations,
                            const Lemma &verb);
// NPP relations governed by `noun`.
PrepProfile NounPrepProfile(std::span<const Relation> relations,
                            const Lemma &noun);

struct TopPreps {
  std::vector<std::string> preps;
  // Fewer than k prepositions were available.
  bool short_list = false;
};

// The k most frequent prepositions, ties broken lexicographically. Throws
// InsufficientEvidence("profile") on an empty profile and ConfigError if
// k < 1.
TopPreps SelectTopPreps(const PrepProfile &profile, int k = 3);

// Keeps the prepositions of `top` that also occur in `noun_profile`, in
// order. Throws InsufficientEvidence("select") if none remain.
std::vector<std::string> IntersectWithNounProfile(
    std::span<const std::string> top, const PrepProfile &noun_profile);

struct NomInstance {
  std::string doc_id;
  int sent_index = 0;
  std::string prep;
  std::string object;
  Span noun_span;

  friend bool operator==(const NomInstance &, const NomInstance &) = default;
};

// Uses of the noun taken as true nominalizations: the noun heading an NP
// followed by a PP with one of the chosen prepositions.
struct NomSelection {
  std::string noun;
  std::vector<std::string> preps;
  std::vector<NomInstance> instances;

  int64_t count() const { return static_cast<int64_t>(instances.size()); }
};

NomSelection SelectNominalizations(std::span<const Relation> relations,
                                   const Lemma &noun,
                                   std::span<const std::string> preps);

enum class TableMode { kNaive, kFiltered };

struct SupportVerbRow {
  std::string verb;
  int64_t count = 0;

  friend bool operator==(const SupportVerbRow &,
                         const SupportVerbRow &) = default;
};

struct SupportVerbTable {
  std::string noun;
  TableMode mode = TableMode::kNaive;
  // Count descending, ties by verb.
  std::vector<SupportVerbRow> rows;

  int64_t total() const;
  std::optional<int64_t> CountOf(std::string_view verb) const;
};

// Verbs taking a selected NP as direct object. The DOBJ object and the NPP
// governor must be the same NP (same sentence and span); for relations read
// without spans this falls back to the sentence, at most one verb per
// selected instance.
SupportVerbTable SupportVerbs(std::span<const Relation> relations,
                              const NomSelection &selection);

// All verbs taking the noun as direct object.
SupportVerbTable NaiveDobjTable(std::span<const Relation> relations,
                                const Lemma &noun);

struct OverlapRow {
  std::string object;
  int64_t verb_frame = 0;  // DOBJ(verb, object)
  int64_t genitive = 0;    // NGEN(noun, object)

  friend bool operator==(const OverlapRow &, const OverlapRow &) = default;
};

// Rows sorted by verb-frame count, then genitive count (both descending),
// then object.
struct OverlapTable {
  std::vector<OverlapRow> rows;

  const OverlapRow *Find(std::string_view object) const;
};

OverlapTable ArgumentOverlap(std::span<const Relation> relations,
                             const Lemma &verb, const Lemma &noun);

// Nouns immediately followed by one of `preps`, by lemma.
using NounTally = std::vector<std::pair<std::string, int64_t>>;

// Tallies NOUN-tagged tokens directly before a PREP token in `preps`.
// Sorted by count descending, then noun.
NounTally TallyNounsBeforePreps(std::span<const TaggedSentence> sentences,
                                std::span<const std::string> preps,
                                const Morphology &morph);

struct Discovery {
  PrepProfile verbal_profile;
  TopPreps preps;
  NounTally tally;
  // Empty if no noun is similar enough to the verb.
  std::vector<NominalizationCandidate> ranked;
  int64_t documents = 0;
  int64_t sentences = 0;
};

// Runs the discovery steps on the already tagged and parsed sentences of
// the documents that contain the verb. Throws InsufficientEvidence with
// stage "profile" when the verb has no PP, "discover" when no noun
// precedes the chosen prepositions.
Discovery DiscoverFromParsed(std::span<const TaggedSentence> sentences,
                             std::span<const Relation> relations,
                             const Lemma &verb, const Morphology &morph,
                             int k = 3,
                             double threshold = kDefaultSimilarityThreshold);

}  // namespace nomsupport

#endif  // NOMSUPPORT_PROFILER_H_
