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

#include "nomsupport/report.h"

#include <cstdio>
#include <istream>
#include <ostream>

#include "nomsupport/error.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

// Reads data rows with exactly `width` fields, skipping the header.
template <typename Fn>
void ForEachRow(std::istream &in, std::string_view what, size_t width,
                Fn &&fn) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 || line.empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != width) {
      throw InvalidInput(std::string(what) + " line " +
                         std::to_string(line_number) + ": expected " +
                         std::to_string(width) + " fields");
    }
    fn(line_number, fields);
  }
}

int64_t ParseCount(std::string_view text, std::string_view what, int line) {
  auto n = ParseInt<int64_t>(text);
  if (!n || *n < 0) {
    throw InvalidInput(std::string(what) + " line " + std::to_string(line) +
                       ": bad count \"" + std::string(text) + "\"");
  }
  return *n;
}

std::string FormatSimilarity(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", s);
  return buf;
}

std::string SpanText(Span s) {
  if (!s.valid()) return "";
  return std::to_string(s.begin) + "-" + std::to_string(s.end);
}

}  // namespace

void WriteProfiles(std::ostream &out, const PrepProfile &verbal,
                   const PrepProfile &nominal) {
  out << "role\ttarget\tprep\tcount\n";
  for (const PrepProfile *p : {&verbal, &nominal}) {
    for (const auto &[prep, count] : p->Sorted()) {
      out << ProfileRoleName(p->role) << '\t' << p->target << '\t' << prep
          << '\t' << count << '\n';
    }
  }
}

std::pair<PrepProfile, PrepProfile> ReadProfiles(std::istream &in) {
  PrepProfile verbal, nominal;
  verbal.role = ProfileRole::kVerbal;
  nominal.role = ProfileRole::kNominal;
  ForEachRow(in, "profiles", 4, [&](int line, const auto &f) {
    PrepProfile *p = nullptr;
    if (f[0] == "verbal") p = &verbal;
    if (f[0] == "nominal") p = &nominal;
    if (!p) {
      throw InvalidInput("profiles line " + std::to_string(line) +
                         ": unknown role");
    }
    p->target = std::string(f[1]);
    p->Add(std::string(f[2]), ParseCount(f[3], "profiles", line));
  });
  return {std::move(verbal), std::move(nominal)};
}

void WriteSelection(std::ostream &out, const NomSelection &selection) {
  out << "record\tprep\tobject\tdoc_id\tsent_index\tnoun_span\n";
  for (const std::string &p : selection.preps) out << "prep\t" << p << "\t\t\t\t\n";
  for (const NomInstance &i : selection.instances) {
    out << "instance\t" << i.prep << '\t' << i.object << '\t' << i.doc_id
        << '\t' << i.sent_index << '\t' << SpanText(i.noun_span) << '\n';
  }
}

NomSelection ReadSelection(std::istream &in, const std::string &noun) {
  NomSelection selection;
  selection.noun = noun;
  ForEachRow(in, "selection", 6, [&](int line, const auto &f) {
    if (f[0] == "prep") {
      selection.preps.emplace_back(f[1]);
      return;
    }
    if (f[0] != "instance") {
      throw InvalidInput("selection line " + std::to_string(line) +
                         ": unknown record");
    }
    NomInstance inst;
    inst.prep = std::string(f[1]);
    inst.object = std::string(f[2]);
    inst.doc_id = std::string(f[3]);
    inst.sent_index = static_cast<int>(ParseCount(f[4], "selection", line));
    if (!f[5].empty()) {
      auto parts = Split(f[5], '-');
      if (parts.size() != 2) {
        throw InvalidInput("selection line " + std::to_string(line) +
                           ": bad span");
      }
      inst.noun_span = {
          static_cast<int>(ParseCount(parts[0], "selection", line)),
          static_cast<int>(ParseCount(parts[1], "selection", line))};
    }
    selection.instances.push_back(std::move(inst));
  });
  return selection;
}

void WriteSupportVerbs(std::ostream &out, const SupportVerbTable &naive,
                       const SupportVerbTable &filtered) {
  out << "mode\tverb\tcount\n";
  for (const SupportVerbRow &r : naive.rows) {
    out << "naive\t" << r.verb << '\t' << r.count << '\n';
  }
  for (const SupportVerbRow &r : filtered.rows) {
    out << "filtered\t" << r.verb << '\t' << r.count << '\n';
  }
}

std::pair<SupportVerbTable, SupportVerbTable> ReadSupportVerbs(
    std::istream &in, const std::string &noun) {
  SupportVerbTable naive{noun, TableMode::kNaive, {}};
  SupportVerbTable filtered{noun, TableMode::kFiltered, {}};
  ForEachRow(in, "support verbs", 3, [&](int line, const auto &f) {
    SupportVerbTable *t = f[0] == "naive"      ? &naive
                          : f[0] == "filtered" ? &filtered
                                               : nullptr;
    if (!t) {
      throw InvalidInput("support verbs line " + std::to_string(line) +
                         ": unknown mode");
    }
    t->rows.push_back(
        {std::string(f[1]), ParseCount(f[2], "support verbs", line)});
  });
  return {std::move(naive), std::move(filtered)};
}

void WriteOverlap(std::ostream &out, const OverlapTable &table) {
  out << "object\tverb_frame\tgenitive\n";
  for (const OverlapRow &r : table.rows) {
    out << r.object << '\t' << r.verb_frame << '\t' << r.genitive << '\n';
  }
}

void WriteDiscovery(std::ostream &out, const Discovery &d) {
  out << "section\titem\tcount\tsimilarity\n";
  out << "documents\t-\t" << d.documents << "\t\n";
  out << "sentences\t-\t" << d.sentences << "\t\n";
  for (const auto &[prep, count] : d.verbal_profile.Sorted()) {
    out << "verbal_profile\t" << prep << '\t' << count << "\t\n";
  }
  for (const std::string &p : d.preps.preps) {
    out << "top_prep\t" << p << '\t' << d.verbal_profile.CountOf(p) << "\t\n";
  }
  for (const auto &[noun, count] : d.tally) {
    out << "tally\t" << noun << '\t' << count << "\t\n";
  }
  for (const NominalizationCandidate &c : d.ranked) {
    out << "candidate\t" << c.noun << '\t' << c.frequency << '\t'
        << FormatSimilarity(c.similarity) << '\n';
  }
}

void WriteReport(std::ostream &out, const NominalizationReport &r) {
  out << "section\titem\tvalue\tvalue2\n";
  out << "pair\t" << r.verb << '\t' << r.noun << "\t\n";
  out << "sentences\t-\t" << r.sentences << "\t\n";
  for (int t = 0; t < kNumTags; ++t) {
    if (r.tag_distribution[t] == 0) continue;
    out << "tag_distribution\t" << TagName(static_cast<Tag>(t)) << '\t'
        << r.tag_distribution[t] << "\t\n";
  }
  for (const PrepProfile *p : {&r.verbal_profile, &r.nominal_profile}) {
    for (const auto &[prep, count] : p->Sorted()) {
      out << ProfileRoleName(p->role) << "_profile\t" << prep << '\t' << count
          << "\t\n";
    }
  }
  for (const std::string &p : r.preps) {
    out << "top_prep\t" << p << '\t' << r.verbal_profile.CountOf(p) << "\t\n";
  }
  out << "selection\tinstances\t" << r.selection.count() << "\t\n";
  out << "selection\tin_direct_object\t" << r.filtered.total() << "\t\n";
  for (const SupportVerbRow &row : r.naive.rows) {
    out << "naive\t" << row.verb << '\t' << row.count << "\t\n";
  }
  for (const SupportVerbRow &row : r.filtered.rows) {
    out << "filtered\t" << row.verb << '\t' << row.count << "\t\n";
  }
  for (const OverlapRow &row : r.overlap.rows) {
    out << "overlap\t" << row.object << '\t' << row.verb_frame << '\t'
        << row.genitive << '\n';
  }
  for (const std::string &w : r.warnings) out << "warning\t" << w << "\t\t\n";
}

void WriteSummary(std::ostream &out, const std::string &verb,
                  const std::string &noun, const std::vector<std::string> &preps,
                  const SupportVerbTable &filtered) {
  out << "verb\tnoun\tpreps\ttop_support_verb\tcount\n";
  out << verb << '\t' << noun << '\t' << Join(preps, ",") << '\t';
  if (filtered.rows.empty()) {
    out << "-\t0\n";
  } else {
    out << filtered.rows[0].verb << '\t' << filtered.rows[0].count << '\n';
  }
}

}  // namespace nomsupport
