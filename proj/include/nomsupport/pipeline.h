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

#ifndef NOMSUPPORT_PIPELINE_H_
#define NOMSUPPORT_PIPELINE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nomsupport/morphology.h"
#include "nomsupport/profiler.h"
#include "nomsupport/shallowparse.h"
#include "nomsupport/tagger.h"
#include "nomsupport/textprep.h"

namespace nomsupport {

// Language data shared by every stage.
struct Resources {
  Morphology morphology;
  TagLexicon lexicon;
  Tokenizer tokenizer;

  // Built from the embedded data files.
  static const Resources &Default();
};

// All forms of the verb and the noun.
FormFilter PairFilter(const Lemma &verb, const Lemma &noun,
                      const Morphology &morph);

// Splits documents into sentences and keeps those matching `filter`.
// Documents are processed concurrently; output follows input order.
std::vector<Sentence> FilterDocuments(std::span<const Document> documents,
                                      const FormFilter &filter,
                                      const Tokenizer &tokenizer,
                                      int threads = 1);

// Keeps every sentence of the documents that contain a filter form.
std::vector<Sentence> FilterWholeDocuments(std::span<const Document> documents,
                                           const FormFilter &filter,
                                           const Tokenizer &tokenizer,
                                           int threads = 1);

// Pretagged counterparts of the two filters.
std::vector<TaggedSentence> FilterTagged(
    std::span<const TaggedSentence> sentences, const FormFilter &filter);
std::vector<TaggedSentence> FilterTaggedDocuments(
    std::span<const TaggedSentence> sentences, const FormFilter &filter);

std::vector<TaggedSentence> TagSentences(std::span<const Sentence> sentences,
                                         const TagLexicon &lexicon,
                                         int threads = 1);

struct PairOptions {
  int k = 3;
  int vpp_window = 1;
  // Keep only top prepositions that also follow the noun.
  bool require_noun_prep = false;
  int threads = 1;
};

struct NominalizationReport {
  std::string verb;
  std::string noun;
  int64_t sentences = 0;
  // Tags assigned to the verb and noun forms.
  TagCounts tag_distribution{};
  PrepProfile verbal_profile;
  PrepProfile nominal_profile;
  TopPreps top_preps;
  // The prepositions used for selection (top_preps, possibly intersected).
  std::vector<std::string> preps;
  NomSelection selection;
  SupportVerbTable naive;
  SupportVerbTable filtered;
  OverlapTable overlap;
  std::vector<std::string> warnings;
};

// Steps after parsing. Throws InsufficientEvidence("profile") when the verb
// has no PP and InsufficientEvidence("select") when the intersection with
// the noun profile is empty.
NominalizationReport AnalyzePair(std::span<const TaggedSentence> tagged,
                                 std::span<const Relation> relations,
                                 const Lemma &verb, const Lemma &noun,
                                 const Morphology &morph,
                                 const PairOptions &options = {});

// Full method over raw documents. Throws InsufficientEvidence("filter")
// when no sentence contains a verb or noun form.
NominalizationReport RunPair(std::span<const Document> documents,
                             const Lemma &verb, const Lemma &noun,
                             const Resources &resources,
                             const PairOptions &options = {});

// Same over pretagged sentences.
NominalizationReport RunPairTagged(std::span<const TaggedSentence> sentences,
                                   const Lemma &verb, const Lemma &noun,
                                   const Resources &resources,
                                   const PairOptions &options = {});

struct DiscoveryOptions {
  int k = 3;
  int vpp_window = 1;
  double threshold = kDefaultSimilarityThreshold;
  int threads = 1;
};

// Finds the nominalized form of `verb` from the documents that contain it.
// Throws InsufficientEvidence("filter") when none does.
Discovery DiscoverNominalization(std::span<const Document> documents,
                                 const Lemma &verb, const Resources &resources,
                                 const DiscoveryOptions &options = {});

Discovery DiscoverNominalizationTagged(std::span<const TaggedSentence> sentences,
                                       const Lemma &verb,
                                       const Resources &resources,
                                       const DiscoveryOptions &options = {});

}  // namespace nomsupport

#endif  // NOMSUPPORT_PIPELINE_H_
