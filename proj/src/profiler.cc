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

#include "nomsupport/profiler.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "nomsupport/error.h"

namespace nomsupport {
namespace {

template <typename Map>
std::vector<std::pair<std::string, int64_t>> SortByCount(const Map &counts) {
  std::vector<std::pair<std::string, int64_t>> out(counts.begin(),
                                                   counts.end());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

PrepProfile BuildProfile(std::span<const Relation> relations,
                         RelationKind kind, const Lemma &target,
                         ProfileRole role) {
  PrepProfile profile;
  profile.target = target.text();
  profile.role = role;
  for (const Relation &r : relations) {
    if (r.kind == kind && r.governor == target.text()) profile.Add(r.prep);
  }
  return profile;
}

SupportVerbTable MakeTable(const std::string &noun, TableMode mode,
                           const std::map<std::string, int64_t> &counts) {
  SupportVerbTable table;
  table.noun = noun;
  table.mode = mode;
  for (auto &[verb, count] : SortByCount(counts)) {
    table.rows.push_back({verb, count});
  }
  return table;
}

}  // namespace

std::string_view ProfileRoleName(ProfileRole role) {
  return role == ProfileRole::kVerbal ? "verbal" : "nominal";
}

void PrepProfile::Add(const std::string &prep, int64_t n) {
  if (n <= 0) return;
  counts[prep] += n;
  total += n;
}

int64_t PrepProfile::CountOf(std::string_view prep) const {
  auto it = counts.find(std::string(prep));
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, int64_t>> PrepProfile::Sorted() const {
  return SortByCount(counts);
}

PrepProfile VerbPrepProfile(std::span<const Relation> relations,
                            const Lemma &verb) {
  return BuildProfile(relations, RelationKind::kVpp, verb,
                      ProfileRole::kVerbal);
}

PrepProfile NounPrepProfile(std::span<const Relation> relations,
                            const Lemma &noun) {
  return BuildProfile(relations, RelationKind::kNpp, noun,
                      ProfileRole::kNominal);
}

TopPreps SelectTopPreps(const PrepProfile &profile, int k) {
  if (k < 1) throw ConfigError("k must be at least 1");
  if (profile.empty()) {
    throw InsufficientEvidence(
        "profile", "no prepositional phrases attached to " +
                       std::string(ProfileRoleName(profile.role)) + " \"" +
                       profile.target + "\"");
  }
  TopPreps top;
  for (const auto &[prep, count] : profile.Sorted()) {
    if (static_cast<int>(top.preps.size()) == k) break;
    top.preps.push_back(prep);
  }
  top.short_list = static_cast<int>(top.preps.size()) < k;
  return top;
}

std::vector<std::string> IntersectWithNounProfile(
    std::span<const std::string> top, const PrepProfile &noun_profile) {
  std::vector<std::string> out;
  for (const std::string &p : top) {
    if (noun_profile.CountOf(p) > 0) out.push_back(p);
  }
  if (out.empty()) {
    throw InsufficientEvidence(
        "select", "none of the verb's top prepositions follows the noun \"" +
                      noun_profile.target + "\"");
  }
  return out;
}

NomSelection SelectNominalizations(std::span<const Relation> relations,
                                   const Lemma &noun,
                                   std::span<const std::string> preps) {
  NomSelection selection;
  selection.noun = noun.text();
  selection.preps.assign(preps.begin(), preps.end());
  if (preps.empty()) return selection;
  const std::set<std::string, std::less<>> wanted(preps.begin(), preps.end());
  for (const Relation &r : relations) {
    if (r.kind != RelationKind::kNpp || r.governor != noun.text()) continue;
    if (!wanted.contains(r.prep)) continue;
    selection.instances.push_back(
        {r.doc_id, r.sent_index, r.prep, r.dependent, r.governor_span});
  }
  return selection;
}

int64_t SupportVerbTable::total() const {
  int64_t sum = 0;
  for (const SupportVerbRow &r : rows) sum += r.count;
  return sum;
}

std::optional<int64_t> SupportVerbTable::CountOf(std::string_view verb) const {
  for (const SupportVerbRow &r : rows) {
    if (r.verb == verb) return r.count;
  }
  return std::nullopt;
}

SupportVerbTable SupportVerbs(std::span<const Relation> relations,
                              const NomSelection &selection) {
  using SentenceKey = std::pair<std::string_view, int>;
  // Selected NP spans per sentence, and per-sentence instance counts for
  // span-less input.
  std::map<SentenceKey, std::set<Span>> spans;
  std::map<SentenceKey, int64_t> budget;
  for (const NomInstance &inst : selection.instances) {
    SentenceKey key{inst.doc_id, inst.sent_index};
    if (inst.noun_span.valid()) spans[key].insert(inst.noun_span);
    ++budget[key];
  }
  std::map<std::string, int64_t> counts;
  for (const Relation &r : relations) {
    if (r.kind != RelationKind::kDobj || r.dependent != selection.noun) {
      continue;
    }
    SentenceKey key{r.doc_id, r.sent_index};
    if (r.dependent_span.valid()) {
      auto it = spans.find(key);
      // Erasing credits each selected NP at most once.
      if (it == spans.end() || it->second.erase(r.dependent_span) == 0) {
        continue;
      }
    } else {
      auto it = budget.find(key);
      if (it == budget.end() || it->second == 0) continue;
      --it->second;
    }
    ++counts[r.governor];
  }
  return MakeTable(selection.noun, TableMode::kFiltered, counts);
}

SupportVerbTable NaiveDobjTable(std::span<const Relation> relations,
                                const Lemma &noun) {
  std::map<std::string, int64_t> counts;
  for (const Relation &r : relations) {
    if (r.kind == RelationKind::kDobj && r.dependent == noun.text()) {
      ++counts[r.governor];
    }
  }
  return MakeTable(noun.text(), TableMode::kNaive, counts);
}

const OverlapRow *OverlapTable::Find(std::string_view object) const {
  for (const OverlapRow &r : rows) {
    if (r.object == object) return &r;
  }
  return nullptr;
}

OverlapTable ArgumentOverlap(std::span<const Relation> relations,
                             const Lemma &verb, const Lemma &noun) {
  std::map<std::string, OverlapRow> by_object;
  for (const Relation &r : relations) {
    if (r.kind == RelationKind::kDobj && r.governor == verb.text()) {
      auto &row = by_object[r.dependent];
      row.object = r.dependent;
      ++row.verb_frame;
    } else if (r.kind == RelationKind::kNgen && r.governor == noun.text()) {
      auto &row = by_object[r.dependent];
      row.object = r.dependent;
      ++row.genitive;
    }
  }
  OverlapTable table;
  for (auto &[object, row] : by_object) table.rows.push_back(row);
  std::sort(table.rows.begin(), table.rows.end(),
            [](const OverlapRow &a, const OverlapRow &b) {
              return std::tie(b.verb_frame, b.genitive, a.object) <
                     std::tie(a.verb_frame, a.genitive, b.object);
            });
  return table;
}

NounTally TallyNounsBeforePreps(std::span<const TaggedSentence> sentences,
                                std::span<const std::string> preps,
                                const Morphology &morph) {
  const std::set<std::string, std::less<>> wanted(preps.begin(), preps.end());
  LemmaCache lemmas(morph);
  std::map<std::string, int64_t> counts;
  for (const TaggedSentence &s : sentences) {
    for (size_t i = 0; i + 1 < s.entries.size(); ++i) {
      const TaggedToken &t = s.entries[i];
      const TaggedToken &next = s.entries[i + 1];
      if (t.tag != Tag::kNoun || next.tag != Tag::kPrep) continue;
      if (!wanted.contains(next.lower)) continue;
      ++counts[lemmas.Get(t.lower, PartOfSpeech::kNoun)];
    }
  }
  return SortByCount(counts);
}

Discovery DiscoverFromParsed(std::span<const TaggedSentence> sentences,
                             std::span<const Relation> relations,
                             const Lemma &verb, const Morphology &morph,
                             int k, double threshold) {
  Discovery d;
  d.sentences = static_cast<int64_t>(sentences.size());
  std::set<std::string_view> docs;
  for (const TaggedSentence &s : sentences) docs.insert(s.doc_id);
  d.documents = static_cast<int64_t>(docs.size());
  d.verbal_profile = VerbPrepProfile(relations, verb);
  d.preps = SelectTopPreps(d.verbal_profile, k);
  d.tally = TallyNounsBeforePreps(sentences, d.preps.preps, morph);
  if (d.tally.empty()) {
    throw InsufficientEvidence(
        "discover", "no noun precedes the prepositions of \"" + verb.text() +
                        "\"");
  }
  d.ranked = PickNominalization(verb, d.tally, threshold);
  return d;
}

}  // namespace nomsupport
