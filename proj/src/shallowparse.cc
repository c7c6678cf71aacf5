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

#include "nomsupport/shallowparse.h"

#include <istream>
#include <ostream>

#include "nomsupport/error.h"
#include "nomsupport/parallel.h"
#include "nomsupport/strings.h"

namespace nomsupport {
namespace {

bool IsNominalHead(Tag t) { return t == Tag::kNoun || t == Tag::kPropn; }

bool IsNominalModifier(Tag t) {
  return t == Tag::kAdj || t == Tag::kNum || IsNominalHead(t);
}

// End (exclusive) of the longest NP starting at `i`, or -1.
int MatchNP(const std::vector<TaggedToken> &e, int i, int *head) {
  const int n = static_cast<int>(e.size());
  int j = i;
  if (j < n && (e[j].tag == Tag::kDet || e[j].tag == Tag::kPoss)) ++j;
  int last_head = -1;
  while (j < n && IsNominalModifier(e[j].tag)) {
    if (IsNominalHead(e[j].tag)) last_head = j;
    ++j;
  }
  if (last_head < 0) return -1;
  *head = last_head;
  return last_head + 1;
}

// End (exclusive) of the VG starting at `i`, or -1.
int MatchVG(const std::vector<TaggedToken> &e, int i) {
  const int n = static_cast<int>(e.size());
  if (i >= n) return -1;
  if (IsVerbTag(e[i].tag)) return i + 1;
  if (e[i].tag != Tag::kAux && e[i].tag != Tag::kModal) return -1;
  for (int j = i + 1; j < n; ++j) {
    Tag t = e[j].tag;
    if (IsVerbTag(t)) return j + 1;
    if (t != Tag::kAux && t != Tag::kModal && t != Tag::kAdv) return -1;
  }
  return -1;
}

Voice VoiceOf(const std::vector<TaggedToken> &e, int begin, int head) {
  bool be = false;
  for (int j = begin; j < head; ++j) {
    if (e[j].tag == Tag::kAux && IsBeForm(e[j].lower)) be = true;
  }
  if (be && e[head].tag == Tag::kVerbPastPart) return Voice::kPassive;
  if (begin > 0 && e[begin - 1].lower == "to") return Voice::kInfinitival;
  if (!be && e[head].tag == Tag::kVerbProg) return Voice::kProgressive;
  return Voice::kActive;
}

std::string HeadLemma(const TaggedToken &t, LemmaCache &lemmas) {
  if (t.tag == Tag::kNoun) return lemmas.Get(t.lower, PartOfSpeech::kNoun);
  if (IsVerbTag(t.tag)) return lemmas.Get(t.lower, PartOfSpeech::kVerb);
  return t.lower;
}

// True if every token strictly between the two chunks is an adverb.
bool OnlyAdverbsBetween(const TaggedSentence &s, const Chunk &a,
                        const Chunk &b) {
  for (int j = a.span.end; j < b.span.begin; ++j) {
    if (s.entries[j].tag != Tag::kAdv) return false;
  }
  return true;
}

std::string SpanText(Span s) {
  if (!s.valid()) return "";
  return std::to_string(s.begin) + "-" + std::to_string(s.end);
}

Span ParseSpan(std::string_view text, int line) {
  if (text.empty()) return {};
  auto parts = Split(text, '-');
  std::optional<int> b, e;
  if (parts.size() == 2) {
    b = ParseInt<int>(parts[0]);
    e = ParseInt<int>(parts[1]);
  }
  if (!b || !e || *b < 0 || *e <= *b) {
    throw InvalidInput("relations line " + std::to_string(line) +
                       ": bad span \"" + std::string(text) + "\"");
  }
  return {*b, *e};
}

}  // namespace

std::string_view ChunkKindName(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::kNP: return "NP";
    case ChunkKind::kVG: return "VG";
    case ChunkKind::kPP: return "PP";
  }
  return "";
}

std::string_view VoiceName(Voice voice) {
  switch (voice) {
    case Voice::kNone: return "none";
    case Voice::kActive: return "active";
    case Voice::kPassive: return "passive";
    case Voice::kProgressive: return "progressive";
    case Voice::kInfinitival: return "infinitival";
  }
  return "";
}

const std::string &LemmaCache::Get(const std::string &lower,
                                   PartOfSpeech pos) {
  auto &cache = pos == PartOfSpeech::kVerb ? verbs_ : nouns_;
  auto it = cache.find(lower);
  if (it != cache.end()) return it->second;
  std::optional<Lemma> lemma = Lemmatize(lower, pos, morph_);
  return cache.emplace(lower, lemma ? lemma->text() : lower).first->second;
}

std::vector<Chunk> ChunkSentence(const TaggedSentence &sentence,
                                 LemmaCache &lemmas) {
  const auto &e = sentence.entries;
  const int n = static_cast<int>(e.size());
  std::vector<Chunk> chunks;
  int i = 0;
  while (i < n) {
    int head = -1;
    int end = -1;
    if (e[i].tag == Tag::kPrep && (end = MatchNP(e, i + 1, &head)) > 0) {
      Chunk c;
      c.kind = ChunkKind::kPP;
      c.span = {i, end};
      c.np = {i + 1, end};
      c.prep = e[i].lower;
      c.head = head;
      c.head_surface = e[head].surface;
      c.head_lemma = HeadLemma(e[head], lemmas);
      chunks.push_back(std::move(c));
      i = end;
    } else if ((end = MatchNP(e, i, &head)) > 0) {
      Chunk c;
      c.kind = ChunkKind::kNP;
      c.span = {i, end};
      c.head = head;
      c.head_surface = e[head].surface;
      c.head_lemma = HeadLemma(e[head], lemmas);
      chunks.push_back(std::move(c));
      i = end;
    } else if ((end = MatchVG(e, i)) > 0) {
      Chunk c;
      c.kind = ChunkKind::kVG;
      c.span = {i, end};
      c.head = end - 1;
      c.head_surface = e[end - 1].surface;
      c.head_lemma = HeadLemma(e[end - 1], lemmas);
      c.voice = VoiceOf(e, i, end - 1);
      chunks.push_back(std::move(c));
      i = end;
    } else {
      ++i;
    }
  }
  return chunks;
}

std::vector<Chunk> ChunkSentence(const TaggedSentence &sentence,
                                 const Morphology &morph) {
  LemmaCache lemmas(morph);
  return ChunkSentence(sentence, lemmas);
}

std::string_view RelationKindName(RelationKind kind) {
  switch (kind) {
    case RelationKind::kDobj: return "DOBJ";
    case RelationKind::kVpp: return "VPP";
    case RelationKind::kNpp: return "NPP";
    case RelationKind::kNgen: return "NGEN";
  }
  return "";
}

std::optional<RelationKind> ParseRelationKind(std::string_view name) {
  if (name == "DOBJ") return RelationKind::kDobj;
  if (name == "VPP") return RelationKind::kVpp;
  if (name == "NPP") return RelationKind::kNpp;
  if (name == "NGEN") return RelationKind::kNgen;
  return std::nullopt;
}

std::vector<Relation> ExtractRelations(std::span<const Chunk> chunks,
                                       const TaggedSentence &sentence,
                                       const ParseOptions &options) {
  std::vector<Relation> out;
  auto emit = [&](RelationKind kind, const std::string &governor,
                  std::string prep, const Chunk &dependent, Span gov_span) {
    out.push_back({kind, governor, std::move(prep), dependent.head_lemma,
                   sentence.doc_id, sentence.index, gov_span,
                   dependent.kind == ChunkKind::kPP ? dependent.np
                                                    : dependent.span});
  };
  auto emit_npp = [&](const Chunk &governor, Span gov_span, const Chunk &pp) {
    emit(RelationKind::kNpp, governor.head_lemma, pp.prep, pp, gov_span);
    if (pp.prep == "of") {
      emit(RelationKind::kNgen, governor.head_lemma, "", pp, gov_span);
    }
  };

  const size_t m = chunks.size();
  for (size_t i = 0; i < m; ++i) {
    const Chunk &c = chunks[i];
    const Chunk *next =
        i + 1 < m && chunks[i + 1].span.begin == c.span.end ? &chunks[i + 1]
                                                             : nullptr;
    switch (c.kind) {
      case ChunkKind::kVG: {
        if (c.voice == Voice::kPassive) break;
        if ((c.voice == Voice::kActive || c.voice == Voice::kInfinitival) &&
            i + 1 < m && chunks[i + 1].kind == ChunkKind::kNP &&
            OnlyAdverbsBetween(sentence, c, chunks[i + 1])) {
          emit(RelationKind::kDobj, c.head_lemma, "", chunks[i + 1], c.span);
        }
        int skipped = 0;
        for (size_t k = i + 1; k < m; ++k) {
          if (!OnlyAdverbsBetween(sentence, chunks[k - 1], chunks[k])) break;
          if (chunks[k].kind == ChunkKind::kPP) {
            if (chunks[k].prep != "by") {
              emit(RelationKind::kVpp, c.head_lemma, chunks[k].prep,
                   chunks[k], c.span);
            }
            break;
          }
          if (chunks[k].kind != ChunkKind::kNP ||
              ++skipped > options.vpp_window) {
            break;
          }
        }
        break;
      }
      case ChunkKind::kNP:
        if (next && next->kind == ChunkKind::kPP) emit_npp(c, c.span, *next);
        break;
      case ChunkKind::kPP:
        if (next && next->kind == ChunkKind::kPP) emit_npp(c, c.np, *next);
        break;
    }
  }
  return out;
}

std::vector<Relation> ParseSentences(std::span<const TaggedSentence> sentences,
                                     const Morphology &morph,
                                     const ParseOptions &options,
                                     int threads) {
  if (options.vpp_window < 0) {
    throw ConfigError("vpp window must be >= 0");
  }
  // Contiguous blocks, each with its own lemma cache.
  const size_t workers = static_cast<size_t>(ResolveThreads(threads));
  const size_t block =
      std::max<size_t>(256, (sentences.size() + workers * 4 - 1) / (workers * 4));
  const size_t blocks = (sentences.size() + block - 1) / block;
  std::vector<std::vector<Relation>> parts(blocks);
  ParallelFor(blocks, threads, [&](size_t b) {
    LemmaCache cache(morph);
    size_t end = std::min(sentences.size(), (b + 1) * block);
    for (size_t i = b * block; i < end; ++i) {
      auto chunks = ChunkSentence(sentences[i], cache);
      auto rels = ExtractRelations(chunks, sentences[i], options);
      parts[b].insert(parts[b].end(), std::make_move_iterator(rels.begin()),
                      std::make_move_iterator(rels.end()));
    }
  });
  std::vector<Relation> out;
  for (auto &p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  }
  return out;
}

void WriteRelations(std::ostream &out, std::span<const Relation> relations) {
  out << kRelationHeader << '\n';
  for (const Relation &r : relations) {
    out << RelationKindName(r.kind) << '\t' << r.governor << '\t' << r.prep
        << '\t' << r.dependent << '\t' << r.doc_id << '\t' << r.sent_index
        << '\t' << SpanText(r.governor_span) << '\t'
        << SpanText(r.dependent_span) << '\n';
  }
}

std::vector<Relation> ReadRelations(std::istream &in) {
  std::vector<Relation> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_number == 1 && line.rfind("kind\t", 0) == 0) continue;
    auto fields = Split(line, '\t');
    auto fail = [&](const std::string &why) {
      return InvalidInput("relations line " + std::to_string(line_number) +
                          ": " + why);
    };
    if (fields.size() != 6 && fields.size() != 8) {
      throw fail("expected 6 or 8 fields");
    }
    auto kind = ParseRelationKind(fields[0]);
    if (!kind) throw fail("unknown relation kind");
    auto index = ParseInt<int>(fields[5]);
    if (!index) throw fail("bad sentence index");
    if (fields[1].empty() || fields[3].empty()) throw fail("empty lemma");
    Relation r{*kind,
               std::string(fields[1]),
               std::string(fields[2]),
               std::string(fields[3]),
               std::string(fields[4]),
               *index,
               {},
               {}};
    if (fields.size() == 8) {
      r.governor_span = ParseSpan(fields[6], line_number);
      r.dependent_span = ParseSpan(fields[7], line_number);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nomsupport
