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

#include "nomsupport/morphology.h"

#include <algorithm>

#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsPlainVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Orthographic vowel test: "u" after "q" is a consonant, "y" after a
// consonant is a vowel.
bool IsVowelAt(std::string_view w, size_t i) {
  char c = w[i];
  if (c == 'u' && i > 0 && w[i - 1] == 'q') return false;
  if (IsPlainVowel(c)) return true;
  return c == 'y' && i > 0 && !IsVowelAt(w, i - 1);
}

int CountSyllables(std::string_view w) {
  int n = 0;
  bool previous = false;
  for (size_t i = 0; i < w.size(); ++i) {
    bool vowel = IsVowelAt(w, i);
    if (vowel && !previous) ++n;
    previous = vowel;
  }
  return n;
}

bool EndsConsonantVowelConsonant(std::string_view w) {
  size_t n = w.size();
  if (n < 3) return false;
  char last = w[n - 1];
  if (last == 'w' || last == 'x' || last == 'y') return false;
  return !IsVowelAt(w, n - 1) && IsVowelAt(w, n - 2) && !IsVowelAt(w, n - 3);
}

bool EndsConsonantY(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && !IsPlainVowel(w[w.size() - 2]);
}

bool EndsSibilant(std::string_view w) {
  return EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
         EndsWith(w, "ch") || EndsWith(w, "sh");
}

std::string Chop(std::string_view w, size_t n) {
  return std::string(w.substr(0, w.size() - n));
}

std::string RegularThirdPerson(std::string_view w) {
  if (EndsSibilant(w) ||
      (w.size() >= 2 && w.back() == 'o' && !IsPlainVowel(w[w.size() - 2]))) {
    return std::string(w) + "es";
  }
  if (EndsConsonantY(w)) return Chop(w, 1) + "ies";
  return std::string(w) + "s";
}

std::string RegularPast(std::string_view w, bool doubles) {
  if (w.back() == 'e') return std::string(w) + "d";
  if (EndsConsonantY(w)) return Chop(w, 1) + "ied";
  if (doubles) return std::string(w) + w.back() + "ed";
  return std::string(w) + "ed";
}

std::string RegularProgressive(std::string_view w, bool doubles) {
  if (EndsWith(w, "ie")) return Chop(w, 2) + "ying";
  if (w.back() == 'e' && w.size() > 2 && !EndsWith(w, "ee") &&
      !EndsWith(w, "ye") && !EndsWith(w, "oe")) {
    return Chop(w, 1) + "ing";
  }
  if (doubles) return std::string(w) + w.back() + "ing";
  return std::string(w) + "ing";
}

std::string RegularPlural(std::string_view w) {
  if (EndsSibilant(w)) return std::string(w) + "es";
  if (EndsConsonantY(w)) return Chop(w, 1) + "ies";
  return std::string(w) + "s";
}

std::string PluralPossessive(const std::string &plural) {
  return plural.back() == 's' ? plural + "'" : plural + "'s";
}

std::vector<std::string> ParseAlternates(std::string_view slot, int line) {
  std::vector<std::string> forms;
  if (slot.empty()) return forms;
  for (std::string_view alt : Split(slot, '/')) {
    alt = Trim(alt);
    if (alt.empty() || ToLower(alt) != alt) {
      throw InvalidInput("irregular table line " + std::to_string(line) +
                         ": override forms must be non-empty lowercase");
    }
    forms.emplace_back(alt);
  }
  return forms;
}

std::set<std::string> ParseWordList(std::string_view text) {
  std::set<std::string> words;
  ForEachDataLine(text, [&](int, std::string_view line) {
    words.insert(ToLower(Trim(line)));
  });
  return words;
}

}  // namespace

std::string_view PartOfSpeechName(PartOfSpeech pos) {
  return pos == PartOfSpeech::kVerb ? "verb" : "noun";
}

bool Lemma::IsValidText(std::string_view text) {
  bool letter = false;
  for (char c : text) {
    auto byte = static_cast<unsigned char>(c);
    if (IsAsciiAlpha(c) || byte >= 0x80) {
      letter = true;
    } else if (c != '-' && c != '\'') {
      return false;
    }
  }
  return letter;
}

Lemma::Lemma(std::string_view text, PartOfSpeech pos)
    : text_(ToLower(text)), pos_(pos) {
  if (!IsValidText(text_)) {
    throw InvalidInput("malformed lemma \"" + std::string(text) + "\"");
  }
}

IrregularTable IrregularTable::Parse(std::string_view text) {
  IrregularTable table;
  ForEachDataLine(text, [&](int line, std::string_view row) {
    auto fields = Split(row, '\t');
    auto fail = [&](const std::string &why) {
      throw InvalidInput("irregular table line " + std::to_string(line) +
                         ": " + why);
    };
    if (fields.size() != 3) fail("expected lemma<TAB>pos<TAB>forms");
    std::string lemma(Trim(fields[0]));
    if (!Lemma::IsValidText(lemma) || ToLower(lemma) != lemma) {
      fail("bad lemma \"" + lemma + "\"");
    }
    auto slots = Split(Trim(fields[2]), ',');
    if (fields[1] == "verb") {
      if (slots.size() != 4) fail("verb entries need four slots");
      VerbOverride forms;
      forms.past = ParseAlternates(Trim(slots[0]), line);
      forms.past_participle = ParseAlternates(Trim(slots[1]), line);
      forms.third_person = ParseAlternates(Trim(slots[2]), line);
      forms.progressive = ParseAlternates(Trim(slots[3]), line);
      table.AddVerb(lemma, std::move(forms));
    } else if (fields[1] == "noun") {
      if (slots.size() != 1) fail("noun entries need exactly one plural");
      auto plural = ParseAlternates(Trim(slots[0]), line);
      if (plural.size() != 1) fail("noun entries need exactly one plural");
      table.AddNoun(lemma, plural[0]);
    } else {
      fail("pos must be verb or noun");
    }
  });
  return table;
}

void IrregularTable::AddVerb(const std::string &lemma, VerbOverride forms) {
  for (const auto *slot : {&forms.past, &forms.past_participle,
                           &forms.third_person, &forms.progressive}) {
    for (const std::string &form : *slot) verb_reverse_.emplace(form, lemma);
  }
  verbs_[lemma] = std::move(forms);
}

void IrregularTable::AddNoun(const std::string &lemma, std::string plural) {
  noun_reverse_.emplace(plural, lemma);
  nouns_[lemma] = std::move(plural);
}

const IrregularTable::VerbOverride *IrregularTable::FindVerb(
    std::string_view lemma) const {
  auto it = verbs_.find(lemma);
  return it == verbs_.end() ? nullptr : &it->second;
}

const std::string *IrregularTable::FindNounPlural(
    std::string_view lemma) const {
  auto it = nouns_.find(lemma);
  return it == nouns_.end() ? nullptr : &it->second;
}

std::vector<std::string> IrregularTable::VerbLemmasFor(
    std::string_view form) const {
  std::vector<std::string> lemmas;
  auto [lo, hi] = verb_reverse_.equal_range(form);
  for (auto it = lo; it != hi; ++it) lemmas.push_back(it->second);
  return lemmas;
}

std::vector<std::string> IrregularTable::NounLemmasFor(
    std::string_view form) const {
  std::vector<std::string> lemmas;
  auto [lo, hi] = noun_reverse_.equal_range(form);
  for (auto it = lo; it != hi; ++it) lemmas.push_back(it->second);
  return lemmas;
}

Morphology::Morphology(IrregularTable irregulars,
                       std::set<std::string> doubling,
                       std::set<std::string> known_verbs,
                       std::set<std::string> known_nouns)
    : irregulars_(std::move(irregulars)),
      doubling_(doubling.begin(), doubling.end()),
      known_verbs_(std::move(known_verbs)),
      known_nouns_(std::move(known_nouns)) {
  for (const auto &[lemma, forms] : irregulars_.verbs()) {
    known_verbs_.insert(lemma);
  }
  for (const auto &[lemma, plural] : irregulars_.nouns()) {
    known_nouns_.insert(lemma);
  }
}

const Morphology &Morphology::Default() {
  static const Morphology *morphology = [] {
    std::set<std::string> verbs, nouns;
    ForEachDataLine(EmbeddedData("lemmas.tsv"),
                    [&](int, std::string_view line) {
                      auto fields = Split(line, '\t');
                      if (fields.size() != 2) return;
                      if (fields[1] == "verb") verbs.emplace(fields[0]);
                      if (fields[1] == "noun") nouns.emplace(fields[0]);
                    });
    return new Morphology(
        IrregularTable::Parse(EmbeddedData("irregular.tsv")),
        ParseWordList(EmbeddedData("doubling.txt")), std::move(verbs),
        std::move(nouns));
  }();
  return *morphology;
}

Morphology Morphology::WithKnownLemmas(std::span<const Lemma> lemmas) const {
  Morphology copy = *this;
  for (const Lemma &lemma : lemmas) {
    if (lemma.pos() == PartOfSpeech::kVerb) {
      copy.known_verbs_.insert(lemma.text());
    } else {
      copy.known_nouns_.insert(lemma.text());
    }
  }
  return copy;
}

bool Morphology::Doubles(std::string_view verb) const {
  if (doubling_.count(verb) > 0) return true;
  return CountSyllables(verb) == 1 && EndsConsonantVowelConsonant(verb);
}

bool Morphology::IsKnown(std::string_view text, PartOfSpeech pos) const {
  const auto &known = pos == PartOfSpeech::kVerb ? known_verbs_ : known_nouns_;
  return known.count(std::string(text)) > 0;
}

std::vector<std::string> InflectVerb(const Lemma &verb, VerbForm form,
                                     const Morphology &morph) {
  const std::string &w = verb.text();
  if (form == VerbForm::kBase) return {w};
  const auto *override = morph.irregulars().FindVerb(w);
  const std::vector<std::string> *slot = nullptr;
  if (override != nullptr) {
    switch (form) {
      case VerbForm::kThirdPerson: slot = &override->third_person; break;
      case VerbForm::kPast: slot = &override->past; break;
      case VerbForm::kPastParticiple: slot = &override->past_participle; break;
      case VerbForm::kProgressive: slot = &override->progressive; break;
      case VerbForm::kBase: break;
    }
  }
  if (slot != nullptr && !slot->empty()) return *slot;
  switch (form) {
    case VerbForm::kThirdPerson:
      return {RegularThirdPerson(w)};
    case VerbForm::kPast:
    case VerbForm::kPastParticiple:
      return {RegularPast(w, morph.Doubles(w))};
    case VerbForm::kProgressive:
      return {RegularProgressive(w, morph.Doubles(w))};
    case VerbForm::kBase:
      break;
  }
  return {w};
}

std::string NounPlural(const Lemma &noun, const Morphology &morph) {
  if (const std::string *plural = morph.irregulars().FindNounPlural(noun.text())) {
    return *plural;
  }
  return RegularPlural(noun.text());
}

WordFormSet ExpandVerb(const Lemma &verb, const Morphology &morph) {
  if (verb.pos() != PartOfSpeech::kVerb) {
    throw InvalidInput("ExpandVerb needs a verb lemma, got noun \"" +
                       verb.text() + "\"");
  }
  WordFormSet set{verb, {verb.text()}};
  for (VerbForm form : {VerbForm::kThirdPerson, VerbForm::kPast,
                        VerbForm::kPastParticiple, VerbForm::kProgressive}) {
    for (std::string &s : InflectVerb(verb, form, morph)) {
      set.forms.insert(std::move(s));
    }
  }
  return set;
}

WordFormSet ExpandNoun(const Lemma &noun, const Morphology &morph) {
  if (noun.pos() != PartOfSpeech::kNoun) {
    throw InvalidInput("ExpandNoun needs a noun lemma, got verb \"" +
                       noun.text() + "\"");
  }
  std::string plural = NounPlural(noun, morph);
  WordFormSet set{noun, {noun.text(), noun.text() + "'s", plural,
                         PluralPossessive(plural)}};
  return set;
}

std::optional<Lemma> Lemmatize(std::string_view surface, PartOfSpeech pos,
                               const Morphology &morph) {
  const std::string form = ToLower(surface);
  if (form.empty()) return std::nullopt;

  std::vector<std::string> candidates;
  auto strip = [&](std::string_view suffix, std::string_view add = "") {
    if (EndsWith(form, suffix) && form.size() > suffix.size()) {
      candidates.push_back(Chop(form, suffix.size()) + std::string(add));
    }
  };
  if (pos == PartOfSpeech::kVerb) {
    candidates = morph.irregulars().VerbLemmasFor(form);
    candidates.push_back(form);
    strip("ies", "y");
    strip("es");
    strip("s");
    strip("ied", "y");
    strip("ed");
    strip("d");
    strip("ying", "ie");
    strip("ing");
    strip("ing", "e");
    for (std::string_view suffix : {"ed", "ing"}) {
      if (EndsWith(form, suffix) && form.size() > suffix.size() + 2) {
        std::string stem = Chop(form, suffix.size());
        if (stem.back() == stem[stem.size() - 2]) stem.pop_back();
        candidates.push_back(stem);
      }
    }
  } else {
    std::string base = form;
    if (EndsWith(form, "'s")) {
      base = Chop(form, 2);
    } else if (EndsWith(form, "s'")) {
      base = Chop(form, 1);
    }
    candidates = morph.irregulars().NounLemmasFor(base);
    candidates.push_back(base);
    auto strip_base = [&](std::string_view suffix, std::string_view add = "") {
      if (EndsWith(base, suffix) && base.size() > suffix.size()) {
        candidates.push_back(Chop(base, suffix.size()) + std::string(add));
      }
    };
    strip_base("ies", "y");
    strip_base("es");
    strip_base("s");
  }

  std::optional<Lemma> best;
  bool best_known = false;
  for (const std::string &candidate : candidates) {
    if (!Lemma::IsValidText(candidate)) continue;
    Lemma lemma(candidate, pos);
    WordFormSet forms = pos == PartOfSpeech::kVerb ? ExpandVerb(lemma, morph)
                                                   : ExpandNoun(lemma, morph);
    if (!forms.Contains(form)) continue;
    bool known = morph.IsKnown(candidate, pos);
    if (best) {
      const std::string &b = best->text();
      if (best_known != known) {
        if (best_known) continue;
      } else if (b.size() != candidate.size()) {
        if (b.size() < candidate.size()) continue;
      } else if (b <= candidate) {
        continue;
      }
    }
    best = lemma;
    best_known = known;
  }
  return best;
}

double PrefixSimilarity(std::string_view a, std::string_view b) {
  if (!a.empty() && a.back() == 'e') a.remove_suffix(1);
  if (!b.empty() && b.back() == 'e') b.remove_suffix(1);
  size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) {
    ++common;
  }
  return static_cast<double>(common) / static_cast<double>(longest);
}

double MorphSimilarity(const Lemma &verb, std::string_view noun) {
  return PrefixSimilarity(verb.text(), ToLower(noun));
}

std::vector<NominalizationCandidate> PickNominalization(
    const Lemma &verb,
    std::span<const std::pair<std::string, int64_t>> candidates,
    double threshold) {
  if (candidates.empty()) {
    throw InvalidInput("PickNominalization needs at least one candidate");
  }
  std::vector<NominalizationCandidate> ranked;
  for (const auto &[noun, frequency] : candidates) {
    double similarity = MorphSimilarity(verb, noun);
    if (similarity < threshold) continue;
    ranked.push_back({ToLower(noun), similarity, frequency});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const NominalizationCandidate &a,
               const NominalizationCandidate &b) {
              if (a.similarity != b.similarity) {
                return a.similarity > b.similarity;
              }
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.noun < b.noun;
            });
  return ranked;
}

}  // namespace nomsupport
