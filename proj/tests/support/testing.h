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

#ifndef NOMSUPPORT_TESTS_SUPPORT_TESTING_H_
#define NOMSUPPORT_TESTS_SUPPORT_TESTING_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nomsupport/pipeline.h"
#include "nomsupport/shallowparse.h"
#include "nomsupport/synth.h"

namespace nomsupport::testing {

// Path of a file in the source tree.
std::filesystem::path SourcePath(std::string_view relative);

// Fresh empty directory under the system temp dir.
std::filesystem::path MakeTempDir(std::string_view prefix);

// Tokenizes, tags and parses `text` as one document with id "d".
std::vector<TaggedSentence> TagText(std::string_view text);
std::vector<Relation> ParseText(std::string_view text,
                                const ParseOptions &options = {});

struct RandomPlant {
  PlantSpec spec;
  std::string verb;
  std::string noun;
};

// A random plant spec over a small vocabulary with at most `max_sentences`
// sentences, planted and filler. Same seed, same spec.
RandomPlant RandomPlantSpec(uint64_t seed, int max_sentences = 200);

// Every document twice, the copy under a distinct id.
std::vector<Document> Duplicate(const std::vector<Document> &documents);

// Relation dump text, as the parse stage writes it.
std::string DumpRelations(const std::vector<Relation> &relations);

}  // namespace nomsupport::testing

#endif  // NOMSUPPORT_TESTS_SUPPORT_TESTING_H_
