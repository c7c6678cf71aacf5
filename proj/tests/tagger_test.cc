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

#include "nomsupport/tagger.h"

#include <gtest/gtest.h>

#include <sstream>

#include "nomsupport/error.h"
#include "nomsupport/pipeline.h"
#include "support/testing.h"

namespace nomsupport {
namespace {

// Space-separated tag names for a one-sentence text.
std::string Tags(std::string_view text) {
  auto tagged = testing::TagText(text);
  EXPECT_EQ(tagged.size(), 1u) << text;
  std::string out;
  for (const TaggedToken &t : tagged.at(0).entries) {
    if (!out.empty()) out += ' ';
    out += TagName(t.tag);
  }
  return out;
}

TEST(TagNameTest, RoundTrip) {
  for (int i = 0; i < kNumTags; ++i) {
    Tag t = static_cast<Tag>(i);
    EXPECT_EQ(ParseTag(TagName(t)), t);
  }
  EXPECT_FALSE(ParseTag("VERBISH").has_value());
}

TEST(TaggerTest, AppealAsVerbAndNoun) {
  EXPECT_EQ(Tags("They appealed to the court ."),
            "PRON VERB_ACT PREP DET NOUN PUNCT");
  EXPECT_EQ(Tags("They rejected the appeal ."),
            "PRON VERB_ACT DET NOUN PUNCT");
  EXPECT_EQ(Tags("They were appealing for the money ."),
            "PRON AUX VERB_PROG PREP DET NOUN PUNCT");
  EXPECT_EQ(Tags("The decision was appealed ."),
            "DET NOUN AUX VERB_PASTPART PUNCT");
  EXPECT_EQ(Tags("They will appeal ."), "PRON MODAL VERB_ACT PUNCT");
  EXPECT_EQ(Tags("They want to appeal the ruling ."),
            "PRON VERB_ACT PREP VERB_ACT DET NOUN PUNCT");
  EXPECT_EQ(Tags("It was an appealing plan ."),
            "PRON AUX DET ADJ NOUN PUNCT");
}

TEST(TaggerTest, AuxiliaryHaveAndDo) {
  EXPECT_EQ(Tags("They have appealed ."), "PRON AUX VERB_PASTPART PUNCT");
  EXPECT_EQ(Tags("They had an appeal ."), "PRON VERB_ACT DET NOUN PUNCT");
  EXPECT_EQ(Tags("They did not appeal ."), "PRON AUX ADV VERB_ACT PUNCT");
}

TEST(TaggerTest, PossessivesAndUnknownWords) {
  EXPECT_EQ(Tags("The appeal's fate was sealed ."),
            "DET POSS NOUN AUX VERB_PASTPART PUNCT");
  EXPECT_EQ(Tags("Then Zorblat appealed ."), "ADV PROPN VERB_ACT PUNCT");
  EXPECT_EQ(Tags("The 1989 appeals failed ."), "DET NUM NOUN VERB_ACT PUNCT");
}

TEST(TaggerTest, SentenceInitialImperative) {
  EXPECT_EQ(Tags("Appeal the ruling ."), "VERB_ACT DET NOUN PUNCT");
  EXPECT_EQ(Tags("Appeals failed ."), "NOUN VERB_ACT PUNCT");
}

TEST(TagLexiconTest, ParseAndLookup) {
  TagLexicon lex = TagLexicon::Parse("# c\nfoo\tNOUN,VERB_ACT\nbar\tADJ\n");
  EXPECT_EQ(lex.size(), 2u);
  auto foo = lex.Lookup("foo");
  ASSERT_EQ(foo.size(), 2u);
  EXPECT_EQ(foo[0], Tag::kNoun);
  EXPECT_TRUE(lex.Lookup("baz").empty());
  EXPECT_THROW(TagLexicon::Parse("foo\tNOPE\n"), InvalidInput);
  EXPECT_THROW(TagLexicon::Parse("foo\n"), InvalidInput);
  EXPECT_GT(TagLexicon::Default().size(), 5000u);
}

TEST(TagsetMappingTest, Penn) {
  const TagsetMapping &m = TagsetMapping::DefaultPenn();
  EXPECT_EQ(m.Map("NN"), Tag::kNoun);
  EXPECT_EQ(m.Map("NNS"), Tag::kNoun);
  EXPECT_EQ(m.Map("VBD"), Tag::kVerbAct);
  EXPECT_EQ(m.Map("VBG"), Tag::kVerbProg);
  EXPECT_EQ(m.Map("VBN"), Tag::kVerbPastPart);
  EXPECT_EQ(m.Map("IN"), Tag::kPrep);
  EXPECT_EQ(m.Map("NOUN"), Tag::kNoun);
  EXPECT_EQ(m.Map("XYZ"), Tag::kOther);
}

TEST(PretaggedTest, ReadsVerticalFormat) {
  std::istringstream in(
      "# header\n"
      "#doc\tw1\t0\n"
      "They\tPRP\nwere\tVBD\nappealing\tVBG\n.\t.\n\n"
      "#doc\tw1\t1\n"
      "broken line\n\n"
      "The\tDT\nappeal\tNN\nfailed\tVBD\n\n");
  PretaggedInput got = ReadPretagged(in, TagsetMapping::DefaultPenn());
  EXPECT_EQ(got.errors, 1);
  ASSERT_EQ(got.sentences.size(), 2u);
  const TaggedSentence &s = got.sentences[0];
  EXPECT_EQ(s.doc_id, "w1");
  EXPECT_EQ(s.index, 0);
  ASSERT_EQ(s.entries.size(), 4u);
  EXPECT_EQ(s.entries[1].tag, Tag::kAux);  // "were" under a verb tag
  EXPECT_EQ(s.entries[2].tag, Tag::kVerbProg);
  EXPECT_EQ(s.entries[2].lower, "appealing");
  EXPECT_EQ(got.sentences[1].entries[1].tag, Tag::kNoun);
}

TEST(PretaggedTest, VerticalRoundTrip) {
  auto tagged = testing::TagText(
      "They appealed to the court. The appeal failed.");
  std::ostringstream out;
  WriteVertical(out, tagged);
  std::istringstream in(out.str());
  PretaggedInput back = ReadPretagged(in, TagsetMapping::DefaultPenn());
  EXPECT_EQ(back.errors, 0);
  EXPECT_EQ(back.sentences, tagged);
}

TEST(TagDistributionTest, CountsTargetForms) {
  auto tagged = testing::TagText(
      "They appealed. The appeal failed. They were appealing. "
      "It was an appealing plan.");
  FormFilter f = PairFilter(Lemma("appeal", PartOfSpeech::kVerb),
                            Lemma("appeal", PartOfSpeech::kNoun),
                            Morphology::Default());
  TagCounts c = TagDistribution(tagged, f);
  EXPECT_EQ(c[static_cast<int>(Tag::kVerbAct)], 1);
  EXPECT_EQ(c[static_cast<int>(Tag::kNoun)], 1);
  EXPECT_EQ(c[static_cast<int>(Tag::kVerbProg)], 1);
  EXPECT_EQ(c[static_cast<int>(Tag::kAdj)], 1);
}

TEST(CompareTaggingsTest, CountsConfusions) {
  auto a = testing::TagText("They appealed. The appeal failed.");
  auto b = a;
  b[1].entries[1].tag = Tag::kVerbAct;
  b.push_back(b[0]);
  b.back().index = 9;
  // Baseline sentences without a reference counterpart are unmatched.
  TagDisagreement d = CompareTaggings(b, a);
  EXPECT_EQ(d.tokens_compared, 7);
  EXPECT_EQ(d.disagreements, 1);
  EXPECT_EQ((d.confusions[{Tag::kVerbAct, Tag::kNoun}]), 1);
  EXPECT_EQ(d.unmatched_sentences, 1);
}

TEST(TaggerTest, IsBeForm) {
  for (const char *w : {"be", "is", "was", "were", "been", "being", "'s"}) {
    EXPECT_TRUE(IsBeForm(w)) << w;
  }
  EXPECT_FALSE(IsBeForm("has"));
}

}  // namespace
}  // namespace nomsupport
