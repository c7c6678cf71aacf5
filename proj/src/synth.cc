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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

using Values = std::map<std::string, std::string>;

const std::map<std::string_view, VerbForm> &VerbSlots() {
  static const auto *slots = new std::map<std::string_view, VerbForm>{
      {"verb", VerbForm::kBase},
      {"verb:3sg", VerbForm::kThirdPerson},
      {"verb:past", VerbForm::kPast},
      {"verb:pastpart", VerbForm::kPastParticiple},
      {"verb:ing", VerbForm::kProgressive},
  };
  return *slots;
}

bool IsKnownSlot(std::string_view slot) {
  return VerbSlots().contains(slot) || slot == "noun" || slot == "noun:pl" ||
         slot == "prep" || slot == "x" || slot == "y";
}

// Slot names referenced by a pattern, in order.
std::vector<std::string> SlotsOf(std::string_view pattern) {
  std::vector<std::string> slots;
  size_t pos = 0;
  while ((pos = pattern.find('{', pos)) != std::string_view::npos) {
    size_t end = pattern.find('}', pos);
    if (end == std::string_view::npos) {
      throw ConfigError("unclosed slot in template \"" + std::string(pattern) +
                        "\"");
    }
    slots.emplace_back(pattern.substr(pos + 1, end - pos - 1));
    pos = end + 1;
  }
  return slots;
}

// The slot's parameter name: "verb:past" -> "verb".
std::string BaseSlot(std::string_view slot) {
  return std::string(slot.substr(0, slot.find(':')));
}

std::string Fill(std::string_view pattern, const Values &values,
                 const Morphology &morph) {
  std::string out;
  size_t pos = 0;
  while (true) {
    size_t open = pattern.find('{', pos);
    out.append(pattern.substr(pos, open - pos));
    if (open == std::string_view::npos) break;
    size_t close = pattern.find('}', open);
    std::string_view slot = pattern.substr(open + 1, close - open - 1);
    const std::string &value = values.at(BaseSlot(slot));
    auto verb = VerbSlots().find(slot);
    if (verb != VerbSlots().end()) {
      out += InflectVerb(Lemma(value, PartOfSpeech::kVerb), verb->second,
                         morph)[0];
    } else if (slot == "noun:pl") {
      out += NounPlural(Lemma(value, PartOfSpeech::kNoun), morph);
    } else {
      out += value;
    }
    pos = close + 1;
  }
  return out;
}

void Annotate(const std::string &annotation, Manifest &manifest) {
  auto f = SplitWhitespace(annotation);
  if (f.empty()) return;
  auto fail = [&] {
    return ConfigError("bad template annotation \"" + annotation + "\"");
  };
  const std::string record(f[0]);
  auto s = [&](size_t i) { return ToLower(f[i]); };
  if (record == "DOBJ" || record == "NGEN") {
    if (f.size() != 3) throw fail();
    ++manifest[{record, s(1), "", s(2)}];
  } else if (record == "VPP" || record == "NPP") {
    if (f.size() != 4) throw fail();
    ++manifest[{record, s(1), s(2), s(3)}];
    if (record == "NPP" && s(2) == "of") ++manifest[{"NGEN", s(1), "", s(3)}];
  } else if (record == "TAG" || record == "NOUNPREP") {
    if (f.size() != 3) throw fail();
    std::string second = record == "TAG" ? std::string(f[2]) : s(2);
    ++manifest[{record, s(1), second, ""}];
  } else {
    throw fail();
  }
}

uint64_t Pick(std::mt19937_64 &rng, size_t n) { return rng() % n; }

}  // namespace

TemplateSet TemplateSet::Parse(std::string_view text) {
  TemplateSet set;
  ForEachDataLine(text, [&](int line, std::string_view row) {
    auto fields = Split(row, '\t');
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw ConfigError("templates line " + std::to_string(line) +
                        ": expected name<TAB>pattern<TAB>annotations");
    }
    SentenceTemplate t;
    t.name = std::string(fields[0]);
    t.pattern = std::string(fields[1]);
    for (const std::string &slot : SlotsOf(t.pattern)) {
      if (!IsKnownSlot(slot)) {
        throw ConfigError("templates line " + std::to_string(line) +
                          ": unknown slot {" + slot + "}");
      }
    }
    if (fields.size() == 3) {
      for (std::string_view a : Split(fields[2], ';')) {
        a = Trim(a);
        if (!a.empty()) t.annotations.emplace_back(a);
      }
    }
    if (set.Find(t.name)) {
      throw ConfigError("templates line " + std::to_string(line) +
                        ": duplicate template " + t.name);
    }
    set.templates_.push_back(std::move(t));
  });
  return set;
}

const TemplateSet &TemplateSet::Default() {
  static const TemplateSet *set =
      new TemplateSet(Parse(EmbeddedData("templates.tsv")));
  return *set;
}

const SentenceTemplate *TemplateSet::Find(std::string_view name) const {
  for (const SentenceTemplate &t : templates_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

PlantSpec PlantSpec::Parse(std::string_view text) {
  PlantSpec spec;
  ForEachDataLine(text, [&](int line, std::string_view row) {
    auto fail = [&](const std::string &why) {
      return ConfigError("plant spec line " + std::to_string(line) + ": " +
                         why);
    };
    if (row.rfind("plant\t", 0) == 0) {
      auto f = Split(row, '\t');
      if (f.size() != 4) {
        throw fail("expected plant<TAB>template<TAB>slots<TAB>count");
      }
      Plant plant;
      plant.template_name = std::string(Trim(f[1]));
      for (std::string_view kv : SplitWhitespace(f[2])) {
        size_t eq = kv.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == kv.size()) {
          throw fail("bad slot assignment \"" + std::string(kv) + "\"");
        }
        auto &values = plant.slots[std::string(kv.substr(0, eq))];
        for (std::string_view v : Split(kv.substr(eq + 1), '|')) {
          if (v.empty()) throw fail("empty slot value");
          values.push_back(ToLower(v));
        }
      }
      auto count = ParseInt<int64_t>(Trim(f[3]));
      if (!count || *count < 0) throw fail("count must be an integer >= 0");
      plant.count = *count;
      spec.plants.push_back(std::move(plant));
      return;
    }
    size_t eq = row.find('=');
    if (eq == std::string_view::npos) throw fail("expected key = value");
    std::string_view key = Trim(row.substr(0, eq));
    std::string_view value = Trim(row.substr(eq + 1));
    if (key == "seed") {
      auto v = ParseInt<uint64_t>(value);
      if (!v) throw fail("bad seed");
      spec.seed = *v;
    } else if (key == "sentences_per_doc") {
      auto v = ParseInt<int>(value);
      if (!v || *v < 1) throw fail("sentences_per_doc must be >= 1");
      spec.sentences_per_doc = *v;
    } else if (key == "filler_rate") {
      char *end = nullptr;
      std::string s(value);
      double r = std::strtod(s.c_str(), &end);
      if (s.empty() || *end != '\0' || !(r >= 0 && r < 1)) {
        throw fail("filler_rate must be in [0, 1)");
      }
      spec.filler_rate = r;
    } else if (key == "filler_sentences") {
      auto v = ParseInt<int64_t>(value);
      if (!v || *v < 0) throw fail("filler_sentences must be >= 0");
      spec.filler_sentences = *v;
    } else {
      throw fail("unknown key \"" + std::string(key) + "\"");
    }
  });
  return spec;
}

void PlantSpec::Validate(const TemplateSet &templates) const {
  for (const Plant &plant : plants) {
    const SentenceTemplate *t = templates.Find(plant.template_name);
    if (!t) throw ConfigError("unknown template \"" + plant.template_name + "\"");
    if (plant.count < 0) throw ConfigError("negative plant count");
    for (const std::string &slot : SlotsOf(t->pattern)) {
      std::string base = BaseSlot(slot);
      if (base == "x" || base == "y") continue;
      if (!plant.slots.contains(base)) {
        throw ConfigError("template \"" + t->name + "\" needs slot {" + base +
                          "}");
      }
    }
    for (const auto &[slot, values] : plant.slots) {
      if (!IsKnownSlot(slot)) throw ConfigError("unknown slot \"" + slot + "\"");
      for (const std::string &v : values) {
        if (!Lemma::IsValidText(v)) {
          throw ConfigError("bad value \"" + v + "\" for slot " + slot);
        }
      }
    }
  }
}

SynthCorpus Synthesize(const PlantSpec &spec, const TemplateSet &templates,
                       const Morphology &morph) {
  spec.Validate(templates);
  std::mt19937_64 rng(spec.seed);

  // Random nouns for {x} and {y}, never one of the planted words.
  std::set<std::string> planted_words;
  for (const Plant &p : spec.plants) {
    for (const auto &[slot, values] : p.slots) {
      planted_words.insert(values.begin(), values.end());
    }
  }
  std::vector<std::string> pool;
  ForEachDataLine(EmbeddedData("filler_nouns.txt"),
                  [&](int, std::string_view w) {
                    std::string word(Trim(w));
                    if (!planted_words.contains(word)) pool.push_back(word);
                  });
  if (pool.empty()) throw ConfigError("no filler nouns left after exclusions");

  auto random_values = [&](Values &values) {
    for (const char *slot : {"x", "y"}) {
      if (!values.contains(slot)) values[slot] = pool[Pick(rng, pool.size())];
    }
  };

  SynthCorpus corpus;
  std::vector<std::string> sentences;
  for (const Plant &plant : spec.plants) {
    const SentenceTemplate &t = *templates.Find(plant.template_name);
    for (int64_t i = 0; i < plant.count; ++i) {
      Values values;
      for (const auto &[slot, options] : plant.slots) {
        values[slot] = options[Pick(rng, options.size())];
      }
      random_values(values);
      sentences.push_back(Fill(t.pattern, values, morph));
      for (const std::string &a : t.annotations) {
        Annotate(Fill(a, values, morph), corpus.manifest);
      }
    }
  }
  corpus.planted_sentences = static_cast<int64_t>(sentences.size());

  std::vector<const SentenceTemplate *> fillers;
  for (const SentenceTemplate &t : templates.templates()) {
    if (t.is_filler()) fillers.push_back(&t);
  }
  const int64_t filler_count =
      static_cast<int64_t>(std::floor(static_cast<double>(
                                          corpus.planted_sentences) *
                                      spec.filler_rate /
                                      (1.0 - spec.filler_rate))) +
      spec.filler_sentences;
  if (filler_count > 0 && fillers.empty()) {
    throw ConfigError("no filler templates available");
  }
  for (int64_t i = 0; i < filler_count; ++i) {
    const SentenceTemplate &t = *fillers[Pick(rng, fillers.size())];
    Values values;
    random_values(values);
    sentences.push_back(Fill(t.pattern, values, morph));
  }
  corpus.filler_sentences = filler_count;

  for (size_t i = sentences.size(); i > 1; --i) {
    std::swap(sentences[i - 1], sentences[Pick(rng, i)]);
  }
  const size_t per_doc = static_cast<size_t>(spec.sentences_per_doc);
  for (size_t begin = 0; begin < sentences.size(); begin += per_doc) {
    char id[32];
    std::snprintf(id, sizeof(id), "doc%05zu.txt", begin / per_doc + 1);
    std::string text;
    for (size_t i = begin; i < std::min(sentences.size(), begin + per_doc);
         ++i) {
      text += sentences[i];
      text += '\n';
    }
    corpus.documents.push_back({id, std::move(text)});
  }
  return corpus;
}

void WriteCorpus(const SynthCorpus &corpus, const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir / "corpus", ec);
  if (ec) {
    throw IoError("cannot create " + (dir / "corpus").string() + ": " +
                  ec.message());
  }
  for (const Document &doc : corpus.documents) {
    WriteFile(dir / "corpus" / doc.id, doc.text);
  }
  std::ostringstream manifest;
  WriteManifest(manifest, corpus.manifest);
  WriteFile(dir / "manifest.tsv", manifest.str());
}

void WriteManifest(std::ostream &out, const Manifest &manifest) {
  out << "record\ta\tb\tc\tcount\n";
  for (const auto &[key, count] : manifest) {
    const auto &[record, a, b, c] = key;
    out << record << '\t' << a << '\t' << b << '\t' << c << '\t' << count
        << '\n';
  }
}

Manifest ReadManifest(std::istream &in) {
  Manifest manifest;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1 || line.empty()) continue;
    auto f = Split(line, '\t');
    auto count = f.size() == 5 ? ParseInt<int64_t>(f[4]) : std::nullopt;
    if (!count) {
      throw InvalidInput("manifest line " + std::to_string(line_number) +
                         ": expected record<TAB>a<TAB>b<TAB>c<TAB>count");
    }
    manifest[{std::string(f[0]), std::string(f[1]), std::string(f[2]),
              std::string(f[3])}] += *count;
  }
  return manifest;
}

int64_t ManifestCount(const Manifest &manifest, std::string_view record,
                      std::string_view a, std::string_view b,
                      std::string_view c) {
  int64_t total = 0;
  for (const auto &[key, count] : manifest) {
    const auto &[r, ka, kb, kc] = key;
    if (r != record) continue;
    if (!a.empty() && ka != a) continue;
    if (!b.empty() && kb != b) continue;
    if (!c.empty() && kc != c) continue;
    total += count;
  }
  return total;
}

}  // namespace nomsupport
