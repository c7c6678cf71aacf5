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

#ifndef NOMSUPPORT_SYNTH_H_
#define NOMSUPPORT_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nomsupport/morphology.h"
#include "nomsupport/textprep.h"

namespace nomsupport {

// A sentence pattern with slots and the ground truth it realizes. See
// data/templates.tsv for the slot and annotation syntax.
struct SentenceTemplate {
  std::string name;
  std::string pattern;
  std::vector<std::string> annotations;

  bool is_filler() const { return name.rfind("filler", 0) == 0; }
};

class TemplateSet {
 public:
  static TemplateSet Parse(std::string_view text);
  // data/templates.tsv.
  static const TemplateSet &Default();

  const SentenceTemplate *Find(std::string_view name) const;
  const std::vector<SentenceTemplate> &templates() const { return templates_; }

 private:
  std::vector<SentenceTemplate> templates_;
};

// One planted frame: `count` sentences from `template_name` with the given
// slot values. A slot with several values picks one at random per sentence.
struct Plant {
  std::string template_name;
  std::map<std::string, std::vector<std::string>> slots;
  int64_t count = 0;
};

// Plant spec file:
//   seed = 7
//   sentences_per_doc = 20
//   filler_rate = 0.25        fraction of filler sentences, in [0, 1)
//   filler_sentences = 0      extra filler sentences
//   plant<TAB>template<TAB>slot=value|value ...<TAB>count
// '#' starts a comment line.
struct PlantSpec {
  uint64_t seed = 1;
  int sentences_per_doc = 20;
  double filler_rate = 0;
  int64_t filler_sentences = 0;
  std::vector<Plant> plants;

  // Throws ConfigError on malformed input.
  static PlantSpec Parse(std::string_view text);
  void Validate(const TemplateSet &templates) const;
};

// Ground-truth tallies keyed by (record, a, b, c):
//   relations: (DOBJ|VPP|NPP|NGEN, governor, prep, dependent)
//   tags:      (TAG, surface, tag, "")
//   noun-preposition adjacency: (NOUNPREP, noun, prep, "")
using ManifestKey = std::tuple<std::string, std::string, std::string,
                               std::string>;
using Manifest = std::map<ManifestKey, int64_t>;

struct SynthCorpus {
  std::vector<Document> documents;
  Manifest manifest;
  int64_t planted_sentences = 0;
  int64_t filler_sentences = 0;
};

// Deterministic in the spec: the same spec yields identical documents.
SynthCorpus Synthesize(const PlantSpec &spec, const TemplateSet &templates,
                       const Morphology &morph);

// Documents go to <dir>/corpus/<id>, the manifest to <dir>/manifest.tsv.
void WriteCorpus(const SynthCorpus &corpus, const std::filesystem::path &dir);

// record<TAB>a<TAB>b<TAB>c<TAB>count.
void WriteManifest(std::ostream &out, const Manifest &manifest);
Manifest ReadManifest(std::istream &in);

// Sum of manifest counts for one record kind with the given leading fields
// (empty strings match anything).
int64_t ManifestCount(const Manifest &manifest, std::string_view record,
                      std::string_view a = "", std::string_view b = "",
                      std::string_view c = "");

}  // namespace nomsupport

#endif  // NOMSUPPORT_SYNTH_H_
