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

#include <gtest/gtest.h>

#include "nomsupport/error.h"
#include "support/testing.h"

namespace nomsupport {
namespace {

using testing::ParseText;

Lemma V(std::string_view s) { return Lemma(s, PartOfSpeech::kVerb); }
Lemma N(std::string_view s) { return Lemma(s, PartOfSpeech::kNoun); }

using Counts = std::vector<std::pair<std::string, int64_t>>;
using Strings = std::vector<std::string>;

Counts Rows(const SupportVerbTable &t) {
  Counts out;
  for (const SupportVerbRow &r : t.rows) out.emplace_back(r.verb, r.count);
  return out;
}

PrepProfile Profile(Counts counts) {
  PrepProfile p;
  for (const auto &[prep, n] : counts) p.Add(prep, n);
  return p;
}

TEST(ProfileTest, VerbalProfile) {
  auto r = ParseText(
      "They appealed to the court. She appealed to the board. "
      "He appealed to the judge. The ruling was appealed to the court. "
      "They appealed by the deadline.");
  PrepProfile p = VerbPrepProfile(r, V("appeal"));
  EXPECT_EQ(p.Sorted(), (Counts{{"to", 3}}));
  EXPECT_EQ(p.total, 3);
  EXPECT_TRUE(p.low_confidence());
  EXPECT_EQ(p.role, ProfileRole::kVerbal);
  EXPECT_TRUE(VerbPrepProfile({}, V("appeal")).empty());
}

TEST(ProfileTest, NominalProfile) {
  auto r = ParseText(
      "There was an appeal for money. There was an appeal for calm. "
      "There was the appeal of the inmate.");
  PrepProfile p = NounPrepProfile(r, N("appeal"));
  EXPECT_EQ(p.Sorted(), (Counts{{"for", 2}, {"of", 1}}));
  EXPECT_EQ(p.CountOf("of"), 1);
  EXPECT_EQ(p.CountOf("to"), 0);
  EXPECT_TRUE(NounPrepProfile({}, N("appeal")).empty());
}

TEST(TopPrepsTest, TiesShortListsAndErrors) {
  TopPreps offer = SelectTopPreps(Profile({{"for", 116}, {"in", 100},
                                           {"to", 98}, {"of", 12}}));
  EXPECT_EQ(offer.preps, (Strings{"for", "in", "to"}));
  EXPECT_FALSE(offer.short_list);

  TopPreps short_list = SelectTopPreps(Profile({{"to", 5}}));
  EXPECT_EQ(short_list.preps, Strings{"to"});
  EXPECT_TRUE(short_list.short_list);

  TopPreps tie = SelectTopPreps(Profile({{"of", 4}, {"in", 4}, {"at", 1}}), 2);
  EXPECT_EQ(tie.preps, (Strings{"in", "of"}));

  EXPECT_THROW(SelectTopPreps(PrepProfile()), InsufficientEvidence);
  EXPECT_THROW(SelectTopPreps(Profile({{"to", 1}}), 0), ConfigError);
}

TEST(TopPrepsTest, IntersectWithNounProfile) {
  Strings top{"to", "for", "with"};
  EXPECT_EQ(IntersectWithNounProfile(top, Profile({{"for", 2}, {"to", 1}})),
            (Strings{"to", "for"}));
}

TEST(SelectTest, KeepsOnlyChosenPreps) {
  auto r = ParseText(
      "There was an appeal to the court. There was an appeal to the board. "
      "There was an appeal about the money.");
  Strings to{"to"};
  NomSelection sel = SelectNominalizations(r, N("appeal"), to);
  EXPECT_EQ(sel.count(), 2);
  EXPECT_EQ(sel.instances[0].object, "court");
  EXPECT_EQ(sel.instances[1].sent_index, 1);
  EXPECT_EQ(SelectNominalizations(r, N("appeal"), {}).count(), 0);
}

constexpr std::string_view kSupportFixture =
    "He made an appeal to the court. He heard an appeal. "
    "He put the appeal in a drawer.";

TEST(SupportVerbsTest, FilteredTableNeedsTheSelectedPp) {
  auto r = ParseText(kSupportFixture);
  Strings to{"to"};
  NomSelection sel = SelectNominalizations(r, N("appeal"), to);
  SupportVerbTable t = SupportVerbs(r, sel);
  EXPECT_EQ(t.mode, TableMode::kFiltered);
  EXPECT_EQ(Rows(t), (Counts{{"make", 1}}));
  EXPECT_TRUE(SupportVerbs(r, NomSelection{"appeal", {}, {}}).rows.empty());
}

TEST(SupportVerbsTest, NaiveTableCountsEveryObject) {
  auto r = ParseText(kSupportFixture);
  SupportVerbTable t = NaiveDobjTable(r, N("appeal"));
  EXPECT_EQ(t.mode, TableMode::kNaive);
  EXPECT_EQ(Rows(t), (Counts{{"hear", 1}, {"make", 1}, {"put", 1}}));
  EXPECT_EQ(t.total(), 3);
  EXPECT_EQ(t.CountOf("put"), 1);
  EXPECT_FALSE(t.CountOf("reject").has_value());
  EXPECT_TRUE(NaiveDobjTable({}, N("appeal")).rows.empty());
}

TEST(SupportVerbsTest, PpOnAnotherOccurrenceDoesNotCount) {
  // The qualifying PP attaches to the second mention, which is not an
  // object of "reject".
  auto r = ParseText(
      "They rejected the appeal because the appeal to the court failed.");
  Strings to{"to"};
  NomSelection sel = SelectNominalizations(r, N("appeal"), to);
  EXPECT_EQ(sel.count(), 1);
  EXPECT_TRUE(SupportVerbs(r, sel).rows.empty());
}

TEST(SupportVerbsTest, SortedByCountThenVerb) {
  auto r = ParseText(
      "They made an appeal to the court. They filed an appeal to the board. "
      "They made an appeal to the judge. They had an appeal to the king.");
  Strings to{"to"};
  auto t = SupportVerbs(r, SelectNominalizations(r, N("appeal"), to));
  EXPECT_EQ(Rows(t), (Counts{{"make", 2}, {"file", 1}, {"have", 1}}));
}

TEST(OverlapTest, JoinsVerbObjectsAndGenitives) {
  auto r = ParseText(
      "They appealed the verdict. There was the appeal of the verdict.");
  OverlapTable t = ArgumentOverlap(r, V("appeal"), N("appeal"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0], (OverlapRow{"verdict", 1, 1}));
}

TEST(OverlapTest, DisjointArgumentsKeepZeroColumns) {
  auto r = ParseText(
      "They appealed the ruling. They appealed the ruling. "
      "There was the appeal of the inmate.");
  OverlapTable t = ArgumentOverlap(r, V("appeal"), N("appeal"));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], (OverlapRow{"ruling", 2, 0}));
  EXPECT_EQ(t.rows[1], (OverlapRow{"inmate", 0, 1}));
  EXPECT_NE(t.Find("inmate"), nullptr);
  EXPECT_EQ(t.Find("verdict"), nullptr);
}

TEST(TallyTest, NounsBeforeChosenPreps) {
  auto tagged = testing::TagText(
      "The proposal to the board failed. Proposals to the council failed. "
      "The plan for the city failed. The money in the bank stayed.");
  Strings preps{"to", "for"};
  NounTally t = TallyNounsBeforePreps(tagged, preps, Morphology::Default());
  EXPECT_EQ(t, (NounTally{{"proposal", 2}, {"plan", 1}}));
}

TEST(DiscoveryTest, FiveDocumentFixture) {
  std::vector<Document> docs = {
      {"1", "They proposed to the board. The proposal to the board failed."},
      {"2", "She proposed to the council. A proposal to cut taxes won."},
      {"3", "He proposed to them. The proposal to merge passed."},
      {"4", "The weather was fine. A program to help failed."},
      {"5", "They proposed for the city. The money for the city ran out."},
  };
  Discovery d = DiscoverNominalization(docs, V("propose"),
                                       Resources::Default());
  EXPECT_EQ(d.documents, 4);
  ASSERT_FALSE(d.ranked.empty());
  EXPECT_EQ(d.ranked[0].noun, "proposal");
  EXPECT_EQ(d.ranked[0].frequency, 3);
  EXPECT_EQ(d.preps.preps, (Strings{"to", "for"}));
}

TEST(DiscoveryTest, CorpusWithoutTheVerbFails) {
  std::vector<Document> docs = {{"1", "Nothing relevant happened here."}};
  EXPECT_THROW(DiscoverNominalization(docs, V("propose"),
                                      Resources::Default()),
               InsufficientEvidence);
}

}  // namespace
}  // namespace nomsupport
