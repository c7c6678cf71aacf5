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

#ifndef NOMSUPPORT_REPORT_H_
#define NOMSUPPORT_REPORT_H_

#include <iosfwd>
#include <string>
#include <utility>

#include "nomsupport/pipeline.h"
#include "nomsupport/profiler.h"

namespace nomsupport {

// Each format is UTF-8 TSV with a one-line header. Readers throw
// InvalidInput on malformed rows.

// role<TAB>target<TAB>prep<TAB>count, verbal rows first.
void WriteProfiles(std::ostream &out, const PrepProfile &verbal,
                   const PrepProfile &nominal);
std::pair<PrepProfile, PrepProfile> ReadProfiles(std::istream &in);

// record<TAB>prep<TAB>object<TAB>doc_id<TAB>sent_index<TAB>noun_span.
// "prep" records list the chosen prepositions in order, "instance" records
// the selected uses.
void WriteSelection(std::ostream &out, const NomSelection &selection);
NomSelection ReadSelection(std::istream &in, const std::string &noun);

// mode<TAB>verb<TAB>count, naive rows then filtered rows.
void WriteSupportVerbs(std::ostream &out, const SupportVerbTable &naive,
                       const SupportVerbTable &filtered);
std::pair<SupportVerbTable, SupportVerbTable> ReadSupportVerbs(
    std::istream &in, const std::string &noun);

// object<TAB>verb_frame<TAB>genitive.
void WriteOverlap(std::ostream &out, const OverlapTable &table);

// section<TAB>item<TAB>count<TAB>similarity: the verbal profile, chosen
// prepositions, noun tally and ranked candidates.
void WriteDiscovery(std::ostream &out, const Discovery &discovery);

// section<TAB>item<TAB>value<TAB>value2: tag distribution, both profiles,
// chosen prepositions, selection counts, naive and filtered tables, overlap
// (value2 holds the genitive count) and warnings.
void WriteReport(std::ostream &out, const NominalizationReport &report);

// verb<TAB>noun<TAB>preps<TAB>top_support_verb<TAB>count; "-" and 0 when
// the filtered table is empty.
void WriteSummary(std::ostream &out, const std::string &verb,
                  const std::string &noun, const std::vector<std::string> &preps,
                  const SupportVerbTable &filtered);

}  // namespace nomsupport

#endif  // NOMSUPPORT_REPORT_H_
