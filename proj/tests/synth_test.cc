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

#include "nomsupport/synth.h"

#include <gtest/gtest.h>

#include <sstream>

#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/pipeline.h"
#include "support/testing.h"

namespace nomsupport {
namespace {

const Morphology &M() { return Morphology::Default(); }
const TemplateSet &Templates() { return TemplateSet::Default(); }

constexpr std::string_view kSmall =
    "seed = 42\n"
    "sentences_per_doc = 4\n"
    "filler_rate = 0.5\n"
    "plant\tvpp\tverb=appeal prep=to\t3\n"
    "plant\tsupport\tverb=make noun=appeal prep=to|for\t4\n"
    "plant\tnpp\tnoun=appeal prep=of x=verdict\t2\n";

int64_t Occurrences(const std::vector<Document> &docs, std::string_view s) {
  int64_t n = 0;
  for (const Document &d : docs) {
    for (size_t at = d.text.find(s); at != std::string::npos;
         at = d.text.find(s, at + 1)) {
      ++n;
    }
  }
  return n;
}

TEST(PlantSpecTest, Parses) {
  PlantSpec spec = PlantSpec::Parse(kSmall);
  EXPECT_EQ(spec.seed, 42u);
  EXPECT_EQ(spec.sentences_per_doc, 4);
  EXPECT_DOUBLE_EQ(spec.filler_rate, 0.5);
  ASSERT_EQ(spec.plants.size(), 3u);
  EXPECT_EQ(spec.plants[1].slots.at("prep"),
            (std::vector<std::string>{"to", "for"}));
  EXPECT_NO_THROW(spec.Validate(Templates()));
}

TEST(PlantSpecTest, RejectsBadInput) {
  for (std::string_view bad :
       {"seed = x\n", "filler_rate = 1\n", "sentences_per_doc = 0\n",
        "colour = red\n", "plant\tvpp\tverb=appeal\n",
        "plant\tvpp\tverb\t3\n", "plant\tvpp\tverb=appeal prep=to\t-1\n"}) {
    EXPECT_THROW(PlantSpec::Parse(bad), ConfigError) << bad;
  }
  for (std::string_view bad :
       {"plant\tnope\tverb=appeal\t1\n", "plant\tvpp\tverb=appeal\t1\n",
        "plant\tvpp\tverb=appeal prep=to colour=red\t1\n",
        "plant\tvpp\tverb=9x prep=to\t1\n"}) {
    EXPECT_THROW(PlantSpec::Parse(bad).Validate(Templates()), ConfigError)
        << bad;
  }
}

TEST(TemplateSetTest, ParsesShippedTemplates) {
  const SentenceTemplate *t = Templates().Find("support");
  ASSERT_NE(t, nullptr);
  EXPECT_FALSE(t->is_filler());
  EXPECT_NE(Templates().Find("filler_rain"), nullptr);
  EXPECT_TRUE(Templates().Find("filler_rain")->is_filler());
  EXPECT_EQ(Templates().Find("nope"), nullptr);
  EXPECT_THROW(TemplateSet::Parse("bad\tThey {verb .\t\n"), ConfigError);
}

TEST(SynthesizeTest, PlantsExactCounts) {
  PlantSpec spec = PlantSpec::Parse(kSmall);
  SynthCorpus c = Synthesize(spec, Templates(), M());
  EXPECT_EQ(c.planted_sentences, 9);
  EXPECT_EQ(c.filler_sentences, 9);  // r/(1-r) = 1 filler per plant
  EXPECT_EQ(c.documents.size(), 5u);
  EXPECT_EQ(Occurrences(c.documents, "appealed to the"), 3);
  EXPECT_EQ(Occurrences(c.documents, "made the appeal"), 4);
  EXPECT_EQ(Occurrences(c.documents, "appeal of the verdict"), 2);

  EXPECT_EQ(ManifestCount(c.manifest, "VPP", "appeal", "to"), 3);
  EXPECT_EQ(ManifestCount(c.manifest, "DOBJ", "make", "", "appeal"), 4);
  EXPECT_EQ(ManifestCount(c.manifest, "NPP", "appeal", "for") +
                ManifestCount(c.manifest, "NPP", "appeal", "to"),
            4);
  EXPECT_EQ(ManifestCount(c.manifest, "NGEN", "appeal", "", "verdict"), 2);
  EXPECT_EQ(ManifestCount(c.manifest, "TAG", "appealed", "VERB_ACT"), 3);
  EXPECT_EQ(ManifestCount(c.manifest, "NOUNPREP", "appeal"), 6);
}

TEST(SynthesizeTest, DeterministicPerSeed) {
  PlantSpec spec = PlantSpec::Parse(kSmall);
  SynthCorpus a = Synthesize(spec, Templates(), M());
  SynthCorpus b = Synthesize(spec, Templates(), M());
  ASSERT_EQ(a.documents.size(), b.documents.size());
  for (size_t i = 0; i < a.documents.size(); ++i) {
    EXPECT_EQ(a.documents[i].id, b.documents[i].id);
    EXPECT_EQ(a.documents[i].text, b.documents[i].text);
  }
  spec.seed = 43;
  SynthCorpus c = Synthesize(spec, Templates(), M());
  bool differs = false;
  for (size_t i = 0; i < a.documents.size(); ++i) {
    differs |= a.documents[i].text != c.documents[i].text;
  }
  EXPECT_TRUE(differs);
  // Random fillers for {x} change; the planted totals do not.
  for (const char *record : {"DOBJ", "VPP", "NPP", "NGEN", "TAG"}) {
    EXPECT_EQ(ManifestCount(a.manifest, record),
              ManifestCount(c.manifest, record))
        << record;
  }
}

TEST(SynthesizeTest, FillerNeverMentionsTargets) {
  PlantSpec spec = PlantSpec::Parse(
      "seed = 3\nfiller_sentences = 500\n"
      "plant\tvpp\tverb=appeal prep=to\t1\n");
  SynthCorpus c = Synthesize(spec, Templates(), M());
  FormFilter f = PairFilter(Lemma("appeal", PartOfSpeech::kVerb),
                            Lemma("appeal", PartOfSpeech::kNoun), M());
  auto kept = FilterDocuments(c.documents, f, Tokenizer::Default());
  EXPECT_EQ(kept.size(), 1u);
  EXPECT_EQ(c.filler_sentences, 500);
}

TEST(ManifestTest, RoundTrip) {
  SynthCorpus c = Synthesize(PlantSpec::Parse(kSmall), Templates(), M());
  std::stringstream ss;
  WriteManifest(ss, c.manifest);
  EXPECT_EQ(ReadManifest(ss), c.manifest);
  std::stringstream bad("record\ta\tb\tc\tcount\nVPP\tx\n");
  EXPECT_THROW(ReadManifest(bad), InvalidInput);
}

TEST(ManifestTest, WriteCorpusLayout) {
  SynthCorpus c = Synthesize(PlantSpec::Parse(kSmall), Templates(), M());
  auto dir = testing::MakeTempDir("synth");
  WriteCorpus(c, dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.tsv"));
  std::vector<std::filesystem::path> paths{dir / "corpus"};
  auto docs = SegmentPaths(paths, {}, nullptr);
  ASSERT_EQ(docs.size(), c.documents.size());
  EXPECT_EQ(docs[0].text, c.documents[0].text);
}

}  // namespace
}  // namespace nomsupport
