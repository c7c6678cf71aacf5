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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "nomsupport/data.h"
#include "nomsupport/error.h"
#include "nomsupport/pipeline.h"
#include "nomsupport/report.h"
#include "nomsupport/strings.h"
#include "nomsupport/synth.h"

namespace nomsupport {
namespace {

namespace fs = std::filesystem;

// Intermediate files in --out, in stage order.
constexpr const char *kFiltered = "filtered.tsv";
constexpr const char *kTagged = "tagged.vert";
constexpr const char *kRelations = "relations.tsv";
constexpr const char *kProfiles = "profiles.tsv";
constexpr const char *kSelection = "selection.tsv";
constexpr const char *kSupportVerbs = "support_verbs.tsv";
constexpr const char *kSummary = "summary.tsv";
constexpr const char *kOverlap = "overlap.tsv";
constexpr const char *kDiscovery = "discovery.tsv";
constexpr const char *kReport = "report.tsv";

struct Options {
  std::vector<std::string> corpus;
  std::string verb;
  std::string noun;
  int k = 3;
  int vpp_window = 1;
  bool require_noun_prep = false;
  std::string tagger = "baseline";
  std::string doc_delim;
  bool strip_tags = false;
  std::string out;
  std::string plant;
  uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  double min_similarity = kDefaultSimilarityThreshold;
};

class Runner {
 public:
  Runner(const Options &options, std::ostream &out, std::ostream &err)
      : opt_(options), out_(out), err_(err) {}

  void Pipeline();
  void Filter();
  void Tag();
  void Parse();
  void Profile();
  void Select();
  void Rank();
  void Overlap();
  void Discover();
  void Synth();

 private:
  fs::path OutDir() const {
    if (opt_.out.empty()) throw ConfigError("--out is required");
    return opt_.out;
  }
  fs::path OutFile(const char *name) const { return OutDir() / name; }
  bool pretagged() const { return opt_.tagger == "pretagged"; }
  bool pair_mode() const { return !opt_.noun.empty(); }

  Lemma Verb() const {
    if (opt_.verb.empty()) throw ConfigError("--verb is required");
    return Lemma(opt_.verb, PartOfSpeech::kVerb);
  }
  Lemma Noun() const {
    if (opt_.noun.empty()) throw ConfigError("--noun is required");
    return Lemma(opt_.noun, PartOfSpeech::kNoun);
  }
  std::vector<Lemma> Targets() const {
    std::vector<Lemma> targets{Verb()};
    if (pair_mode()) targets.push_back(Noun());
    return targets;
  }
  Morphology Morph() const {
    auto targets = Targets();
    return Resources::Default().morphology.WithKnownLemmas(targets);
  }
  FormFilter Forms(const Morphology &morph) const {
    if (pair_mode()) return PairFilter(Verb(), Noun(), morph);
    FormFilter filter;
    filter.Add(ExpandVerb(Verb(), morph));
    return filter;
  }

  // Contents of an intermediate written by `stage`.
  std::string Input(const char *name, const char *stage) const {
    fs::path path = OutFile(name);
    if (!fs::exists(path)) throw DependencyError(path.string(), stage);
    return ReadFile(path);
  }
  void Output(const char *name, const std::string &content) const {
    fs::create_directories(OutDir());
    WriteFile(OutFile(name), content);
  }

  std::vector<TaggedSentence> ReadTagged() const {
    std::istringstream in(Input(kTagged, "tag"));
    PretaggedInput input = ReadPretagged(in, TagsetMapping());
    if (input.errors > 0) {
      throw InvalidInput(OutFile(kTagged).string() + ": " +
                         input.messages.front());
    }
    return std::move(input.sentences);
  }
  std::vector<Relation> ReadRelationsFile() const {
    std::istringstream in(Input(kRelations, "parse"));
    return ReadRelations(in);
  }

  std::vector<fs::path> CorpusPaths() const {
    if (opt_.corpus.empty()) throw ConfigError("--corpus is required");
    return {opt_.corpus.begin(), opt_.corpus.end()};
  }
  std::vector<TaggedSentence> ReadPretaggedCorpus() const;

  const Options &opt_;
  std::ostream &out_;
  std::ostream &err_;
};

// Files under the corpus paths, with the ids SegmentPaths would give them.
std::vector<std::pair<fs::path, std::string>> ListCorpusFiles(
    const std::vector<fs::path> &paths) {
  std::vector<std::pair<fs::path, std::string>> files;
  for (const fs::path &p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto &entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file()) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      for (const fs::path &f : found) {
        files.emplace_back(f, fs::relative(f, p).generic_string());
      }
    } else if (fs::exists(p)) {
      files.emplace_back(p, p.filename().string());
    } else {
      throw IoError("no such file or directory: " + p.string());
    }
  }
  return files;
}

std::vector<TaggedSentence> Runner::ReadPretaggedCorpus() const {
  std::vector<TaggedSentence> all;
  std::set<std::pair<std::string, int>> seen;
  for (const auto &[path, id] : ListCorpusFiles(CorpusPaths())) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    PretaggedInput input =
        ReadPretagged(in, TagsetMapping::DefaultPenn(), id);
    if (input.errors > 0) {
      err_ << "warning: " << path.string() << ": skipped " << input.errors
           << " malformed sentences (" << input.messages.front() << ")\n";
    }
    for (TaggedSentence &s : input.sentences) {
      if (!seen.insert({s.doc_id, s.index}).second) {
        throw ConfigError("duplicate sentence " + s.doc_id + "/" +
                          std::to_string(s.index) + " in pretagged corpus");
      }
      all.push_back(std::move(s));
    }
  }
  return all;
}

void Runner::Filter() {
  const Morphology morph = Morph();
  const FormFilter forms = Forms(morph);
  std::vector<Sentence> kept;
  size_t documents = 0;
  if (pretagged()) {
    std::vector<TaggedSentence> all = ReadPretaggedCorpus();
    std::vector<TaggedSentence> tagged = pair_mode()
                                             ? FilterTagged(all, forms)
                                             : FilterTaggedDocuments(all, forms);
    std::set<std::string_view> docs;
    for (const TaggedSentence &s : all) docs.insert(s.doc_id);
    documents = docs.size();
    for (const TaggedSentence &s : tagged) {
      Sentence sentence{s.doc_id, s.index, {}};
      for (const TaggedToken &e : s.entries) {
        sentence.tokens.push_back(MakeToken(e.surface));
      }
      kept.push_back(std::move(sentence));
    }
  } else {
    std::vector<DocumentError> errors;
    SegmentOptions seg{opt_.doc_delim, opt_.strip_tags};
    std::vector<Document> docs = SegmentPaths(CorpusPaths(), seg, &errors);
    for (const DocumentError &e : errors) {
      err_ << "warning: skipped document " << e.id << ": " << e.message
           << '\n';
    }
    documents = docs.size();
    kept = pair_mode() ? FilterDocuments(docs, forms,
                                         Resources::Default().tokenizer,
                                         opt_.threads)
                       : FilterWholeDocuments(docs, forms,
                                              Resources::Default().tokenizer,
                                              opt_.threads);
  }
  std::ostringstream s;
  WriteSentences(s, kept);
  Output(kFiltered, s.str());
  out_ << "filter\tdocuments\t" << documents << "\n";
  out_ << "filter\tsentences\t" << kept.size() << "\n";
  if (kept.empty()) {
    throw InsufficientEvidence("filter",
                               "no sentence contains a target form");
  }
}

void Runner::Tag() {
  std::istringstream in(Input(kFiltered, "filter"));
  std::vector<Sentence> sentences = ReadSentences(in);
  std::vector<TaggedSentence> tagged;
  if (pretagged()) {
    std::map<std::pair<std::string, int>, TaggedSentence> by_key;
    for (TaggedSentence &s : ReadPretaggedCorpus()) {
      auto key = std::make_pair(s.doc_id, s.index);
      by_key.emplace(std::move(key), std::move(s));
    }
    for (const Sentence &s : sentences) {
      auto it = by_key.find({s.doc_id, s.index});
      if (it == by_key.end()) {
        throw InvalidInput("sentence " + s.doc_id + "/" +
                           std::to_string(s.index) +
                           " is not in the pretagged corpus");
      }
      tagged.push_back(std::move(it->second));
    }
  } else {
    tagged = TagSentences(sentences, Resources::Default().lexicon,
                          opt_.threads);
  }
  std::ostringstream s;
  WriteVertical(s, tagged);
  Output(kTagged, s.str());
  out_ << "tag\tsentences\t" << tagged.size() << "\n";
}

void Runner::Parse() {
  std::vector<TaggedSentence> tagged = ReadTagged();
  std::vector<Relation> relations = ParseSentences(
      tagged, Morph(), {.vpp_window = opt_.vpp_window}, opt_.threads);
  std::ostringstream s;
  WriteRelations(s, relations);
  Output(kRelations, s.str());
  out_ << "parse\trelations\t" << relations.size() << "\n";
}

void Runner::Profile() {
  const Lemma verb = Verb();
  const Lemma noun = Noun();
  std::vector<Relation> relations = ReadRelationsFile();
  PrepProfile verbal = VerbPrepProfile(relations, verb);
  PrepProfile nominal = NounPrepProfile(relations, noun);
  std::ostringstream s;
  WriteProfiles(s, verbal, nominal);
  Output(kProfiles, s.str());
  out_ << s.str();
  for (const PrepProfile *p : {&verbal, &nominal}) {
    if (p->low_confidence()) {
      err_ << "warning: " << ProfileRoleName(p->role) << " profile has only "
           << p->total << " relations\n";
    }
  }
}

void Runner::Select() {
  const Lemma noun = Noun();
  std::istringstream in(Input(kProfiles, "profile"));
  auto [verbal, nominal] = ReadProfiles(in);
  verbal.target = opt_.verb;
  nominal.target = opt_.noun;
  std::vector<Relation> relations = ReadRelationsFile();
  TopPreps top = SelectTopPreps(verbal, opt_.k);
  if (top.short_list) {
    err_ << "warning: only " << top.preps.size()
         << " prepositions available for k=" << opt_.k << "\n";
  }
  std::vector<std::string> preps = top.preps;
  if (opt_.require_noun_prep) preps = IntersectWithNounProfile(preps, nominal);
  NomSelection selection = SelectNominalizations(relations, noun, preps);
  std::ostringstream s;
  WriteSelection(s, selection);
  Output(kSelection, s.str());
  out_ << "select\tpreps\t" << Join(preps, ",") << "\n";
  out_ << "select\tinstances\t" << selection.count() << "\n";
}

void Runner::Rank() {
  const Lemma noun = Noun();
  std::istringstream in(Input(kSelection, "select"));
  NomSelection selection = ReadSelection(in, noun.text());
  std::vector<Relation> relations = ReadRelationsFile();
  SupportVerbTable naive = NaiveDobjTable(relations, noun);
  SupportVerbTable filtered = SupportVerbs(relations, selection);
  std::ostringstream table, summary;
  WriteSupportVerbs(table, naive, filtered);
  WriteSummary(summary, Verb().text(), noun.text(), selection.preps, filtered);
  Output(kSupportVerbs, table.str());
  Output(kSummary, summary.str());
  out_ << summary.str();
}

void Runner::Overlap() {
  std::vector<Relation> relations = ReadRelationsFile();
  OverlapTable table = ArgumentOverlap(relations, Verb(), Noun());
  std::ostringstream s;
  WriteOverlap(s, table);
  Output(kOverlap, s.str());
  out_ << "overlap\trows\t" << table.rows.size() << "\n";
}

void Runner::Discover() {
  const Lemma verb = Verb();
  std::vector<TaggedSentence> tagged = ReadTagged();
  std::vector<Relation> relations = ReadRelationsFile();
  Discovery d = DiscoverFromParsed(tagged, relations, verb, Morph(), opt_.k,
                                   opt_.min_similarity);
  std::ostringstream s;
  WriteDiscovery(s, d);
  Output(kDiscovery, s.str());
  if (d.ranked.empty()) {
    throw InsufficientEvidence("discover",
                               "no noun before the prepositions of \"" +
                                   verb.text() + "\" resembles the verb");
  }
  out_ << d.ranked.front().noun << "\n";
}

void Runner::Pipeline() {
  Targets();  // validate before touching the corpus
  Filter();
  Tag();
  Parse();
  if (!pair_mode()) {
    Discover();
    return;
  }
  Profile();
  Select();
  Rank();
  Overlap();
  PairOptions options;
  options.k = opt_.k;
  options.vpp_window = opt_.vpp_window;
  options.require_noun_prep = opt_.require_noun_prep;
  options.threads = opt_.threads;
  NominalizationReport report = AnalyzePair(
      ReadTagged(), ReadRelationsFile(), Verb(), Noun(), Morph(), options);
  std::ostringstream s;
  WriteReport(s, report);
  Output(kReport, s.str());
}

void Runner::Synth() {
  if (opt_.plant.empty()) throw ConfigError("--plant is required");
  PlantSpec spec = PlantSpec::Parse(ReadFile(opt_.plant));
  if (opt_.seed_set) spec.seed = opt_.seed;
  SynthCorpus corpus =
      Synthesize(spec, TemplateSet::Default(), Morphology::Default());
  WriteCorpus(corpus, OutDir());
  out_ << "synth\tdocuments\t" << corpus.documents.size() << "\n";
  out_ << "synth\tplanted_sentences\t" << corpus.planted_sentences << "\n";
  out_ << "synth\tfiller_sentences\t" << corpus.filler_sentences << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Support-verb extraction for nominalizations", "nomsupport"};
  Options opt;
  app.set_config("--config", "", "Read `key = value` defaults from a file");
  app.add_option("--corpus", opt.corpus, "Corpus files or directories");
  app.add_option("--verb", opt.verb, "Verb lemma");
  app.add_option("--noun", opt.noun,
                 "Nominalized noun lemma; omit for discovery mode");
  app.add_option("--k", opt.k, "Number of prepositions to retain")
      ->check(CLI::PositiveNumber);
  app.add_option("--vpp-window", opt.vpp_window,
                 "Maximum NPs between a verb and its PP")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--require-noun-prep", opt.require_noun_prep,
               "Keep only prepositions that also follow the noun");
  app.add_option("--tagger", opt.tagger, "Tagging mode")
      ->check(CLI::IsMember({"baseline", "pretagged"}));
  app.add_option("--doc-delim", opt.doc_delim,
                 "Line separating documents within a file");
  app.add_flag("--strip-tags", opt.strip_tags, "Remove <...> markup");
  app.add_option("--out", opt.out, "Directory for intermediates and reports");
  app.add_option("--plant", opt.plant, "Plant spec for synth");
  auto *seed = app.add_option("--seed", opt.seed, "Override the plant seed");
  app.add_option("--threads", opt.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--min-similarity", opt.min_similarity,
                 "Minimum verb/noun similarity for discovery")
      ->check(CLI::Range(0.0, 1.0));
  app.fallthrough();
  app.require_subcommand(1, 1);

  using Stage = void (Runner::*)();
  const std::vector<std::tuple<const char *, const char *, Stage>> commands = {
      {"pipeline", "Run all stages", &Runner::Pipeline},
      {"filter", "Keep sentences with target forms", &Runner::Filter},
      {"tag", "Tag the filtered sentences", &Runner::Tag},
      {"parse", "Chunk and extract relations", &Runner::Parse},
      {"profile", "Build preposition profiles", &Runner::Profile},
      {"select", "Select true nominalizations", &Runner::Select},
      {"rank", "Rank support verbs", &Runner::Rank},
      {"overlap", "Compare verb objects with of-genitives", &Runner::Overlap},
      {"discover", "Find the nominalized form of a verb", &Runner::Discover},
      {"synth", "Generate a planted synthetic corpus", &Runner::Synth},
  };
  for (const auto &[name, help, stage] : commands) {
    app.add_subcommand(name, help);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    opt.seed_set = seed->count() > 0;
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  Runner runner(opt, out, err);
  try {
    if (!opt.noun.empty() && opt.verb.empty()) {
      throw ConfigError("--noun requires --verb");
    }
    for (const auto &[name, help, stage] : commands) {
      if (app.got_subcommand(name)) (runner.*stage)();
    }
    return kExitOk;
  } catch (const DependencyError &e) {
    err << "error: " << e.what() << "\n";
    return kExitDependency;
  } catch (const InsufficientEvidence &e) {
    err << "error: " << e.what() << "\n";
    return kExitInsufficientEvidence;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const fs::filesystem_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace nomsupport
