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

#include "oracle/recount.h"

#include <algorithm>
#include <stdexcept>

namespace nomsupport::oracle {
namespace {

std::vector<std::string> Fields(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Recount RecountDump(std::string_view dump, const std::string &verb,
                    const std::string &noun, int k) {
  Recount r;
  // Keys are doc, sentence and NP span joined into one string.
  std::multiset<std::string> npp_sites;  // NPP(noun, p, *) with p recorded
  std::vector<std::pair<std::string, std::string>> npp_with_prep;
  std::vector<std::pair<std::string, std::string>> dobj_sites;  // key, verb

  size_t pos = 0;
  bool header = true;
  while (pos < dump.size()) {
    size_t end = dump.find('\n', pos);
    if (end == std::string_view::npos) end = dump.size();
    std::string_view line = dump.substr(pos, end - pos);
    pos = end + 1;
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f = Fields(line);
    if (f.size() != 8) throw std::runtime_error("oracle expects 8 columns");
    const std::string &kind = f[0], &gov = f[1], &prep = f[2], &dep = f[3];
    if (kind == "VPP" && gov == verb) ++r.verbal[prep];
    if (kind == "NPP" && gov == noun) {
      ++r.nominal[prep];
      npp_with_prep.emplace_back(f[4] + "|" + f[5] + "|" + f[6], prep);
    }
    if (kind == "DOBJ" && dep == noun) {
      ++r.naive[gov];
      dobj_sites.emplace_back(f[4] + "|" + f[5] + "|" + f[7], gov);
    }
    if (kind == "DOBJ" && gov == verb) ++r.overlap[dep].first;
    if (kind == "NGEN" && gov == noun) ++r.overlap[dep].second;
  }

  std::vector<std::pair<std::string, int64_t>> ranked(r.verbal.begin(),
                                                      r.verbal.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  for (int i = 0; i < k && i < static_cast<int>(ranked.size()); ++i) {
    r.top_preps.push_back(ranked[i].first);
  }
  for (const auto &[site, prep] : npp_with_prep) {
    if (std::find(r.top_preps.begin(), r.top_preps.end(), prep) !=
        r.top_preps.end()) {
      npp_sites.insert(site);
      ++r.selected;
    }
  }
  for (const auto &[site, v] : dobj_sites) {
    auto it = npp_sites.find(site);
    if (it == npp_sites.end()) continue;
    npp_sites.erase(it);
    ++r.filtered[v];
  }
  return r;
}

}  // namespace nomsupport::oracle
