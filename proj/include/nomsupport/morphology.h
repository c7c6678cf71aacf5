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

#ifndef NOMSUPPORT_MORPHOLOGY_H_
#define NOMSUPPORT_MORPHOLOGY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nomsupport {

enum class PartOfSpeech { kVerb, kNoun };

std::string_view PartOfSpeechName(PartOfSpeech pos);

// Lowercase citation form of a verb or noun. Construction validates and
// lowercases the text: it must be non-empty and contain only letters
// (ASCII or UTF-8 multibyte), hyphens and apostrophes.
class Lemma {
 public:
  Lemma(std::string_view text, PartOfSpeech pos);

  const std::string &text() const { return text_; }
  PartOfSpeech pos() const { return pos_; }

  static bool IsValidText(std::string_view text);

  friend bool operator==(const Lemma &, const Lemma &) = default;
  friend auto operator<=>(const Lemma &, const Lemma &) = default;

 private:
  std::string text_;
  PartOfSpeech pos_;
};

// Surface forms of a lemma, used as a corpus filter.
struct WordFormSet {
  Lemma lemma;
  std::set<std::string> forms;

  bool Contains(std::string_view form) const {
    return forms.find(std::string(form)) != forms.end();
  }
};

enum class VerbForm { kBase, kThirdPerson, kPast, kPastParticiple, kProgressive };

// Irregular inflections. A verb override fills any of the four inflected
// slots, each with one or more alternates ("was/were"); an empty slot falls
// back to the regular rules. Nouns override the plural.
class IrregularTable {
 public:
  struct VerbOverride {
    std::vector<std::string> past;
    std::vector<std::string> past_participle;
    std::vector<std::string> third_person;
    std::vector<std::string> progressive;
  };

  // Parses `lemma<TAB>pos<TAB>form1,form2,...` lines. Verb lines list
  // past,past-participle,third-person,progressive; noun lines list the
  // plural. Throws InvalidInput naming the offending line.
  static IrregularTable Parse(std::string_view text);

  void AddVerb(const std::string &lemma, VerbOverride forms);
  void AddNoun(const std::string &lemma, std::string plural);

  const VerbOverride *FindVerb(std::string_view lemma) const;
  const std::string *FindNounPlural(std::string_view lemma) const;

  // Lemmas whose overrides produce `form`.
  std::vector<std::string> VerbLemmasFor(std::string_view form) const;
  std::vector<std::string> NounLemmasFor(std::string_view form) const;

  const std::map<std::string, VerbOverride, std::less<>> &verbs() const {
    return verbs_;
  }
  const std::map<std::string, std::string, std::less<>> &nouns() const {
    return nouns_;
  }

 private:
  std::map<std::string, VerbOverride, std::less<>> verbs_;
  std::map<std::string, std::string, std::less<>> nouns_;
  std::multimap<std::string, std::string, std::less<>> verb_reverse_;
  std::multimap<std::string, std::string, std::less<>> noun_reverse_;
};

// Inflection rules plus the data they consult: the irregular table, the
// list of polysyllabic verbs that double a final consonant, and the known
// lemma lists used to choose among competing lemmatizations. Immutable
// once built; safe to share between threads.
class Morphology {
 public:
  Morphology(IrregularTable irregulars, std::set<std::string> doubling,
             std::set<std::string> known_verbs,
             std::set<std::string> known_nouns);

  // The tables shipped in data/.
  static const Morphology &Default();

  // Copy with extra known lemmas, e.g. the verb/noun pair of a run.
  Morphology WithKnownLemmas(std::span<const Lemma> lemmas) const;

  const IrregularTable &irregulars() const { return irregulars_; }
  bool Doubles(std::string_view verb) const;
  bool IsKnown(std::string_view text, PartOfSpeech pos) const;
  const std::set<std::string> &known_verbs() const { return known_verbs_; }
  const std::set<std::string> &known_nouns() const { return known_nouns_; }

 private:
  IrregularTable irregulars_;
  std::set<std::string, std::less<>> doubling_;
  std::set<std::string> known_verbs_;
  std::set<std::string> known_nouns_;
};

// All surface forms of a verb for one inflection slot, primary form first.
std::vector<std::string> InflectVerb(const Lemma &verb, VerbForm form,
                                     const Morphology &morph);

// Regular or overridden plural of a noun.
std::string NounPlural(const Lemma &noun, const Morphology &morph);

// Base, third person, past, past participle and progressive forms.
// Throws InvalidInput if `verb` is not a verb lemma.
WordFormSet ExpandVerb(const Lemma &verb, const Morphology &morph);

// Singular, plural and both possessives (appeal's, appeals').
WordFormSet ExpandNoun(const Lemma &noun, const Morphology &morph);

// Maps a lowercase surface form back to its lemma. Candidates are the
// irregular-table lemmas for the form, the form itself and every
// un-suffixation; only those whose expansion regenerates `form` survive.
// Known lemmas win over unknown ones, then the shortest, then the
// lexicographically smallest. Returns nullopt when the form is not a valid
// lemma text and nothing regenerates it.
std::optional<Lemma> Lemmatize(std::string_view form, PartOfSpeech pos,
                               const Morphology &morph);

// Normalized longest common prefix of two stems, each stripped of a final
// "e": lcp / max(len). Symmetric; 1.0 iff the stems are identical.
double PrefixSimilarity(std::string_view a, std::string_view b);

// PrefixSimilarity between a verb lemma and a candidate noun.
double MorphSimilarity(const Lemma &verb, std::string_view noun);

struct NominalizationCandidate {
  std::string noun;
  double similarity = 0;
  int64_t frequency = 0;

  friend bool operator==(const NominalizationCandidate &,
                         const NominalizationCandidate &) = default;
};

constexpr double kDefaultSimilarityThreshold = 0.5;

// Ranks candidate nouns by similarity to the verb (descending), then
// frequency (descending), then spelling. Candidates below `threshold` are
// dropped; an empty result means discovery failed. Throws InvalidInput on an
// empty candidate list.
std::vector<NominalizationCandidate> PickNominalization(
    const Lemma &verb,
    std::span<const std::pair<std::string, int64_t>> candidates,
    double threshold = kDefaultSimilarityThreshold);

}  // namespace nomsupport

#endif  // NOMSUPPORT_MORPHOLOGY_H_
