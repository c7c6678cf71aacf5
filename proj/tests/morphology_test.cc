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

#include <gtest/gtest.h>

#include <random>

#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

const Morphology &M() { return Morphology::Default(); }

std::set<std::string> Forms(const WordFormSet &s) { return s.forms; }

Lemma V(std::string_view s) { return Lemma(s, PartOfSpeech::kVerb); }
Lemma N(std::string_view s) { return Lemma(s, PartOfSpeech::kNoun); }

TEST(LemmaTest, LowercasesAndValidates) {
  EXPECT_EQ(V("Appeal").text(), "appeal");
  EXPECT_THROW(V(""), InvalidInput);
  EXPECT_THROW(V("123"), InvalidInput);
  EXPECT_THROW(V("two words"), InvalidInput);
  EXPECT_NO_THROW(N("follow-up"));
}

TEST(ExpandTest, AppealFormsMatchTheFilterList) {
  std::set<std::string> all = Forms(ExpandVerb(V("appeal"), M()));
  std::set<std::string> noun = Forms(ExpandNoun(N("appeal"), M()));
  all.insert(noun.begin(), noun.end());
  EXPECT_EQ(all, (std::set<std::string>{"appeal", "appeal's", "appealing",
                                        "appealed", "appeals", "appeals'"}));
}

TEST(ExpandTest, VerbRules) {
  EXPECT_EQ(Forms(ExpandVerb(V("propose"), M())),
            (std::set<std::string>{"propose", "proposes", "proposed",
                                   "proposing"}));
  // Consonant + y, sibilant, monosyllabic doubling, listed doubling.
  EXPECT_EQ(InflectVerb(V("deny"), VerbForm::kPast, M())[0], "denied");
  EXPECT_EQ(InflectVerb(V("deny"), VerbForm::kThirdPerson, M())[0], "denies");
  EXPECT_EQ(InflectVerb(V("deny"), VerbForm::kProgressive, M())[0], "denying");
  EXPECT_EQ(InflectVerb(V("push"), VerbForm::kThirdPerson, M())[0], "pushes");
  EXPECT_EQ(InflectVerb(V("stop"), VerbForm::kPast, M())[0], "stopped");
  EXPECT_EQ(InflectVerb(V("submit"), VerbForm::kProgressive, M())[0],
            "submitting");
  EXPECT_EQ(InflectVerb(V("offer"), VerbForm::kPast, M())[0], "offered");
  EXPECT_EQ(InflectVerb(V("die"), VerbForm::kProgressive, M())[0], "dying");
  EXPECT_EQ(InflectVerb(V("agree"), VerbForm::kProgressive, M())[0],
            "agreeing");
}

TEST(ExpandTest, IrregularVerbs) {
  EXPECT_EQ(InflectVerb(V("make"), VerbForm::kPast, M())[0], "made");
  EXPECT_EQ(InflectVerb(V("hear"), VerbForm::kPastParticiple, M())[0],
            "heard");
  EXPECT_EQ(InflectVerb(V("begin"), VerbForm::kPast, M())[0], "began");
  EXPECT_EQ(InflectVerb(V("begin"), VerbForm::kPastParticiple, M())[0],
            "begun");
  auto be = ExpandVerb(V("be"), M());
  for (const char *f : {"is", "am", "are", "was", "were", "been", "being"}) {
    EXPECT_TRUE(be.Contains(f)) << f;
  }
}

TEST(ExpandTest, NounPluralsAndPossessives) {
  EXPECT_EQ(NounPlural(N("box"), M()), "boxes");
  EXPECT_EQ(NounPlural(N("city"), M()), "cities");
  EXPECT_EQ(NounPlural(N("child"), M()), "children");
  EXPECT_EQ(Forms(ExpandNoun(N("child"), M())),
            (std::set<std::string>{"child", "child's", "children",
                                   "children's"}));
  EXPECT_TRUE(ExpandNoun(N("box"), M()).Contains("boxes'"));
}

TEST(ExpandTest, WrongPartOfSpeechThrows) {
  EXPECT_THROW(ExpandVerb(N("appeal"), M()), InvalidInput);
  EXPECT_THROW(ExpandNoun(V("appeal"), M()), InvalidInput);
}

TEST(IrregularTableTest, ParsesAlternatesAndRejectsBadLines) {
  IrregularTable t = IrregularTable::Parse(
      "# comment\nbe\tverb\twas/were,been,is/am/are,being\nmouse\tnoun\tmice\n");
  ASSERT_NE(t.FindVerb("be"), nullptr);
  EXPECT_EQ(t.FindVerb("be")->past,
            (std::vector<std::string>{"was", "were"}));
  EXPECT_EQ(*t.FindNounPlural("mouse"), "mice");
  EXPECT_EQ(t.NounLemmasFor("mice"), std::vector<std::string>{"mouse"});
  EXPECT_THROW(IrregularTable::Parse("go\tverb\twent\n"), InvalidInput);
  EXPECT_THROW(IrregularTable::Parse("go\tadverb\twent\n"), InvalidInput);
}

TEST(LemmatizeTest, Examples) {
  auto lemma = [](std::string_view f, PartOfSpeech pos) {
    auto l = Lemmatize(f, pos, M());
    return l ? l->text() : std::string("<none>");
  };
  EXPECT_EQ(lemma("proposing", PartOfSpeech::kVerb), "propose");
  EXPECT_EQ(lemma("proposed", PartOfSpeech::kVerb), "propose");
  EXPECT_EQ(lemma("appealed", PartOfSpeech::kVerb), "appeal");
  EXPECT_EQ(lemma("made", PartOfSpeech::kVerb), "make");
  EXPECT_EQ(lemma("submitted", PartOfSpeech::kVerb), "submit");
  EXPECT_EQ(lemma("denies", PartOfSpeech::kVerb), "deny");
  EXPECT_EQ(lemma("was", PartOfSpeech::kVerb), "be");
  EXPECT_EQ(lemma("appeals", PartOfSpeech::kNoun), "appeal");
  EXPECT_EQ(lemma("appeals'", PartOfSpeech::kNoun), "appeal");
  EXPECT_EQ(lemma("children", PartOfSpeech::kNoun), "child");
  EXPECT_EQ(lemma("cities", PartOfSpeech::kNoun), "city");
  EXPECT_EQ(lemma("u.s.", PartOfSpeech::kNoun), "<none>");
}

TEST(LemmatizeTest, KnownLemmasWinOverShorterOnes) {
  // "propos" would regenerate "proposing" too; only the known lemma is
  // a real verb.
  Morphology bare(IrregularTable(), {}, {}, {});
  EXPECT_EQ(Lemmatize("proposing", PartOfSpeech::kVerb, bare)->text(),
            "propos");
  std::vector<Lemma> known{V("propose")};
  EXPECT_EQ(Lemmatize("proposing", PartOfSpeech::kVerb,
                      bare.WithKnownLemmas(known))
                ->text(),
            "propose");
}

// Every form of every shipped lemma maps back to a lemma that regenerates
// it, and almost always to the lemma it came from.
TEST(LemmatizeTest, RoundTripOverShippedLemmas) {
  int forms = 0;
  int exact = 0;
  std::vector<std::string> misses;
  ForEachDataLine(EmbeddedData("lemmas.tsv"), [&](int, std::string_view row) {
    auto f = Split(row, '\t');
    ASSERT_EQ(f.size(), 2u);
    PartOfSpeech pos =
        f[1] == "verb" ? PartOfSpeech::kVerb : PartOfSpeech::kNoun;
    Lemma lemma(f[0], pos);
    WordFormSet set = pos == PartOfSpeech::kVerb ? ExpandVerb(lemma, M())
                                                 : ExpandNoun(lemma, M());
    for (const std::string &form : set.forms) {
      ++forms;
      auto back = Lemmatize(form, pos, M());
      ASSERT_TRUE(back.has_value()) << form;
      WordFormSet again = pos == PartOfSpeech::kVerb
                              ? ExpandVerb(*back, M())
                              : ExpandNoun(*back, M());
      EXPECT_TRUE(again.Contains(form)) << form << " -> " << back->text();
      EXPECT_TRUE(M().IsKnown(back->text(), pos)) << form;
      if (back->text() == lemma.text()) {
        ++exact;
      } else {
        misses.push_back(form + "->" + back->text());
      }
    }
  });
  EXPECT_GT(forms, 4000);
  // The misses are genuine homographs ("found" is also a form of "find").
  EXPECT_GE(static_cast<double>(exact) / forms, 0.99)
      << misses.size() << " misses, e.g. " << misses.front();
}

TEST(SimilarityTest, PrefixSimilarity) {
  EXPECT_DOUBLE_EQ(PrefixSimilarity("propose", "proposal"), 6.0 / 8.0);
  EXPECT_DOUBLE_EQ(PrefixSimilarity("propose", "program"), 3.0 / 7.0);
  EXPECT_DOUBLE_EQ(PrefixSimilarity("offer", "offer"), 1.0);
  EXPECT_DOUBLE_EQ(PrefixSimilarity("", ""), 1.0);
  EXPECT_DOUBLE_EQ(PrefixSimilarity("warn", "warning"), 4.0 / 7.0);
}

TEST(SimilarityTest, SymmetricAndBounded) {
  std::mt19937 rng(7);
  auto word = [&] {
    std::string w;
    int n = 1 + rng() % 8;
    for (int i = 0; i < n; ++i) w += static_cast<char>('a' + rng() % 4);
    return w;
  };
  for (int i = 0; i < 2000; ++i) {
    std::string a = word(), b = word();
    double s = PrefixSimilarity(a, b);
    EXPECT_DOUBLE_EQ(s, PrefixSimilarity(b, a));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_DOUBLE_EQ(PrefixSimilarity(a, a), 1.0);
  }
}

std::vector<std::pair<std::string, int64_t>> ProposeTally() {
  return {{"million", 458}, {"billion", 438}, {"accord", 296},
          {"increase", 260}, {"call", 239},   {"year", 201},
          {"change", 198},  {"support", 178}, {"proposal", 154},
          {"percent", 154}, {"money", 143},   {"plan", 142},
          {"cut", 139},     {"aid", 130},     {"program", 124},
          {"people", 122}};
}

TEST(PickNominalizationTest, ProposeTallyYieldsProposal) {
  auto tally = ProposeTally();
  auto ranked = PickNominalization(V("propose"), tally);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].noun, "proposal");
  EXPECT_DOUBLE_EQ(ranked[0].similarity, 0.75);
  EXPECT_EQ(ranked[0].frequency, 154);
  // With no threshold the frequent nouns stay below the related one.
  auto all = PickNominalization(V("propose"), tally, 0.0);
  EXPECT_EQ(all.size(), tally.size());
  EXPECT_EQ(all[0].noun, "proposal");
  EXPECT_EQ(all[1].noun, "program");
}

TEST(PickNominalizationTest, TiesAndErrors) {
  std::vector<std::pair<std::string, int64_t>> t = {
      {"offers", 2}, {"offer", 5}, {"offering", 5}};
  auto ranked = PickNominalization(V("offer"), t, 0.5);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].noun, "offer");
  EXPECT_EQ(ranked[1].noun, "offers");
  EXPECT_THROW(PickNominalization(V("offer"), {}), InvalidInput);
}

}  // namespace
}  // namespace nomsupport
