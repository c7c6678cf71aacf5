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

#include "nomsupport/pipeline.h"

#include <algorithm>
#include <set>

#include "nomsupport/error.h"
#include "nomsupport/parallel.h"

namespace nomsupport {
namespace {

template <typename T>
std::vector<T> Flatten(std::vector<std::vector<T>> &parts) {
  size_t total = 0;
  for (const auto &p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto &p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  }
  return out;
}

bool TaggedMatches(const TaggedSentence &s, const FormFilter &filter) {
  return std::any_of(s.entries.begin(), s.entries.end(),
                     [&](const TaggedToken &e) {
                       return filter.Contains(e.lower);
                     });
}

Morphology PairMorphology(const Morphology &base,
                          std::initializer_list<Lemma> lemmas) {
  std::vector<Lemma> list(lemmas);
  return base.WithKnownLemmas(list);
}

}  // namespace

const Resources &Resources::Default() {
  static const Resources *resources = new Resources{
      Morphology::Default(), TagLexicon::Default(), Tokenizer::Default()};
  return *resources;
}

FormFilter PairFilter(const Lemma &verb, const Lemma &noun,
                      const Morphology &morph) {
  FormFilter filter;
  filter.Add(ExpandVerb(verb, morph));
  filter.Add(ExpandNoun(noun, morph));
  return filter;
}

std::vector<Sentence> FilterDocuments(std::span<const Document> documents,
                                      const FormFilter &filter,
                                      const Tokenizer &tokenizer,
                                      int threads) {
  if (filter.empty()) throw InvalidInput("empty form filter");
  std::vector<std::vector<Sentence>> parts(documents.size());
  ParallelFor(documents.size(), threads, [&](size_t i) {
    std::vector<Sentence> all = tokenizer.Sentences(documents[i]);
    for (Sentence &s : all) {
      if (filter.Matches(s.tokens)) parts[i].push_back(std::move(s));
    }
  });
  return Flatten(parts);
}

std::vector<Sentence> FilterWholeDocuments(std::span<const Document> documents,
                                           const FormFilter &filter,
                                           const Tokenizer &tokenizer,
                                           int threads) {
  if (filter.empty()) throw InvalidInput("empty form filter");
  std::vector<std::vector<Sentence>> parts(documents.size());
  ParallelFor(documents.size(), threads, [&](size_t i) {
    std::vector<Sentence> all = tokenizer.Sentences(documents[i]);
    bool hit = std::any_of(all.begin(), all.end(), [&](const Sentence &s) {
      return filter.Matches(s.tokens);
    });
    if (hit) parts[i] = std::move(all);
  });
  return Flatten(parts);
}

std::vector<TaggedSentence> FilterTagged(
    std::span<const TaggedSentence> sentences, const FormFilter &filter) {
  if (filter.empty()) throw InvalidInput("empty form filter");
  std::vector<TaggedSentence> out;
  for (const TaggedSentence &s : sentences) {
    if (TaggedMatches(s, filter)) out.push_back(s);
  }
  return out;
}

std::vector<TaggedSentence> FilterTaggedDocuments(
    std::span<const TaggedSentence> sentences, const FormFilter &filter) {
  if (filter.empty()) throw InvalidInput("empty form filter");
  std::set<std::string_view> docs;
  for (const TaggedSentence &s : sentences) {
    if (TaggedMatches(s, filter)) docs.insert(s.doc_id);
  }
  std::vector<TaggedSentence> out;
  for (const TaggedSentence &s : sentences) {
    if (docs.contains(s.doc_id)) out.push_back(s);
  }
  return out;
}

std::vector<TaggedSentence> TagSentences(std::span<const Sentence> sentences,
                                         const TagLexicon &lexicon,
                                         int threads) {
  std::vector<TaggedSentence> out(sentences.size());
  ParallelFor(sentences.size(), threads, [&](size_t i) {
    out[i] = TagSentence(sentences[i], lexicon);
  });
  return out;
}

NominalizationReport AnalyzePair(std::span<const TaggedSentence> tagged,
                                 std::span<const Relation> relations,
                                 const Lemma &verb, const Lemma &noun,
                                 const Morphology &morph,
                                 const PairOptions &options) {
  NominalizationReport report;
  report.verb = verb.text();
  report.noun = noun.text();
  report.sentences = static_cast<int64_t>(tagged.size());
  report.tag_distribution =
      TagDistribution(tagged, PairFilter(verb, noun, morph));

  report.verbal_profile = VerbPrepProfile(relations, verb);
  report.nominal_profile = NounPrepProfile(relations, noun);
  report.top_preps = SelectTopPreps(report.verbal_profile, options.k);
  report.preps = report.top_preps.preps;
  if (options.require_noun_prep) {
    report.preps =
        IntersectWithNounProfile(report.preps, report.nominal_profile);
  }
  report.selection = SelectNominalizations(relations, noun, report.preps);
  report.naive = NaiveDobjTable(relations, noun);
  report.filtered = SupportVerbs(relations, report.selection);
  report.overlap = ArgumentOverlap(relations, verb, noun);

  for (const PrepProfile *p : {&report.verbal_profile, &report.nominal_profile}) {
    if (p->low_confidence()) {
      report.warnings.push_back(
          std::string(ProfileRoleName(p->role)) + " profile of \"" +
          p->target + "\" has only " + std::to_string(p->total) +
          " relations; low confidence");
    }
  }
  if (report.top_preps.short_list) {
    report.warnings.push_back(
        "only " + std::to_string(report.top_preps.preps.size()) +
        " prepositions available for k=" + std::to_string(options.k));
  }
  return report;
}

NominalizationReport RunPair(std::span<const Document> documents,
                             const Lemma &verb, const Lemma &noun,
                             const Resources &resources,
                             const PairOptions &options) {
  const Morphology morph =
      PairMorphology(resources.morphology, {verb, noun});
  std::vector<Sentence> sentences =
      FilterDocuments(documents, PairFilter(verb, noun, morph),
                      resources.tokenizer, options.threads);
  if (sentences.empty()) {
    throw InsufficientEvidence("filter", "no sentence contains a form of \"" +
                                             verb.text() + "\" or \"" +
                                             noun.text() + "\"");
  }
  std::vector<TaggedSentence> tagged =
      TagSentences(sentences, resources.lexicon, options.threads);
  std::vector<Relation> relations = ParseSentences(
      tagged, morph, {.vpp_window = options.vpp_window}, options.threads);
  return AnalyzePair(tagged, relations, verb, noun, morph, options);
}

NominalizationReport RunPairTagged(std::span<const TaggedSentence> sentences,
                                   const Lemma &verb, const Lemma &noun,
                                   const Resources &resources,
                                   const PairOptions &options) {
  const Morphology morph =
      PairMorphology(resources.morphology, {verb, noun});
  std::vector<TaggedSentence> tagged =
      FilterTagged(sentences, PairFilter(verb, noun, morph));
  if (tagged.empty()) {
    throw InsufficientEvidence("filter", "no sentence contains a form of \"" +
                                             verb.text() + "\" or \"" +
                                             noun.text() + "\"");
  }
  std::vector<Relation> relations = ParseSentences(
      tagged, morph, {.vpp_window = options.vpp_window}, options.threads);
  return AnalyzePair(tagged, relations, verb, noun, morph, options);
}

Discovery DiscoverNominalizationTagged(std::span<const TaggedSentence> sentences,
                                       const Lemma &verb,
                                       const Resources &resources,
                                       const DiscoveryOptions &options) {
  const Morphology morph = PairMorphology(resources.morphology, {verb});
  FormFilter filter;
  filter.Add(ExpandVerb(verb, morph));
  std::vector<TaggedSentence> kept = FilterTaggedDocuments(sentences, filter);
  if (kept.empty()) {
    throw InsufficientEvidence(
        "filter", "no document contains a form of \"" + verb.text() + "\"");
  }
  std::vector<Relation> relations = ParseSentences(
      kept, morph, {.vpp_window = options.vpp_window}, options.threads);
  return DiscoverFromParsed(kept, relations, verb, morph, options.k,
                            options.threshold);
}

Discovery DiscoverNominalization(std::span<const Document> documents,
                                 const Lemma &verb, const Resources &resources,
                                 const DiscoveryOptions &options) {
  const Morphology morph = PairMorphology(resources.morphology, {verb});
  FormFilter filter;
  filter.Add(ExpandVerb(verb, morph));
  std::vector<Sentence> sentences = FilterWholeDocuments(
      documents, filter, resources.tokenizer, options.threads);
  if (sentences.empty()) {
    throw InsufficientEvidence(
        "filter", "no document contains a form of \"" + verb.text() + "\"");
  }
  std::vector<TaggedSentence> tagged =
      TagSentences(sentences, resources.lexicon, options.threads);
  std::vector<Relation> relations = ParseSentences(
      tagged, morph, {.vpp_window = options.vpp_window}, options.threads);
  return DiscoverFromParsed(tagged, relations, verb, morph, options.k,
                            options.threshold);
}

}  // namespace nomsupport
