#!/usr/bin/env python3
# Copyright 2026 The Nomsupport Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the lemma list, irregular table, doubling list and seed
lexicon under data/ from wordfreq + lemminflect.

Maintenance tool only; the C++ build reads the checked-in data files.

  pip install wordfreq lemminflect
  python3 tools/make_data.py data/
"""

import os
import re
import sys

import lemminflect
from wordfreq import top_n_list

VOWELS = set("aeiou")

# Words the corpus method needs regardless of frequency rank.
EXTRA_VERBS = """appeal propose offer discuss demand order complain warn confirm
assert suggest reject hear make file have issue begin launch hold meet press
increase submit give bring receive win recommend repeat dispute study
destroy surprise allow return die survive ail oust refer prefer occur admit
commit permit regret transfer compel omit acquit expel deter incur confer defer
equip patrol propel excel emit""".split()
# Lemmas from the frequency list that are not usable citation forms.
SKIP = set("up okay shit blue comes means".split())
# Nouns whose plural is the singular form.
INVARIANT_PLURALS = set("news series people police percent species sheep deer "
                        "fish aircraft".split())
EXTRA_NOUNS = """appeal proposal offer discussion demand order complaint warning
confirmation assertion suggestion decision ruling conviction verdict case
sentence judgment inmate plan million billion accord increase call year
change support percent money cut aid program people destruction city enemy
court committee drawer homeland predecessor defense board council""".split()

CLOSED_CLASS = {
    "DET": "the a an this that these those every each some any no another "
           "either neither all both half such what which whatever".split(),
    "POSS": "his her its their our my your whose".split(),
    "PREP": "to for in on with of from at about against by into onto over "
            "under after before during without between through among since "
            "until within across upon toward towards near behind despite "
            "beyond along around amid amidst beneath beside besides down "
            "inside outside throughout via per than unlike off".split(),
    "PRON": "i you he she it we they me him us them myself yourself himself "
            "herself itself ourselves themselves who whom there nothing "
            "something anything everything nobody somebody anybody everyone "
            "someone anyone none mine yours hers ours theirs it's that's "
            "there's he's she's".split(),
    "AUX": "be is am are was were been being 's 're 'm".split(),
    "MODAL": "will would can could may might shall should must 'll 'd "
             "cannot".split(),
    "CONJ": "and or but nor yet so because although though while whereas "
            "if unless whether".split(),
    "ADV": "not n't never also very too just only even still already "
           "yesterday today tomorrow now then here often soon again always "
           "perhaps however rather quite almost nearly directly "
           "recently later ago".split(),
    "NUM": "one two three four five six seven eight nine ten eleven twelve "
           "twenty thirty hundred thousand".split(),
}
# Ambiguous auxiliaries: resolved in context by the tagger.
AUX_VERB = "have has had having do does did doing done".split()
PROPN = "mr. mrs. ms. dr. gen. sen. rep. gov. lt. col. sgt. st. jr.".split()
PUNCT = ". , ; : ! ? ( ) [ ] { } \" ' ` `` '' -- - ...".split()


def is_vowel(w, i):
    c = w[i]
    if c == "u" and i > 0 and w[i - 1] == "q":
        return False
    if c in VOWELS:
        return True
    return c == "y" and i > 0 and not is_vowel(w, i - 1)


def syllables(w):
    n, prev = 0, False
    for i in range(len(w)):
        v = is_vowel(w, i)
        if v and not prev:
            n += 1
        prev = v
    return n


def ends_cvc(w):
    n = len(w)
    return (n >= 3 and w[-1] not in "wxy" and not is_vowel(w, n - 1)
            and is_vowel(w, n - 2) and not is_vowel(w, n - 3))


def doubles(w, doubling):
    return w in doubling or (syllables(w) == 1 and ends_cvc(w))


def cons_y(w):
    return len(w) >= 2 and w[-1] == "y" and w[-2] not in VOWELS


def sibilant(w):
    return w.endswith(("s", "x", "z", "ch", "sh"))


def third(w):
    if sibilant(w) or (len(w) >= 2 and w[-1] == "o" and w[-2] not in VOWELS):
        return w + "es"
    if cons_y(w):
        return w[:-1] + "ies"
    return w + "s"


def past(w, doubling):
    if w.endswith("e"):
        return w + "d"
    if cons_y(w):
        return w[:-1] + "ied"
    if doubles(w, doubling):
        return w + w[-1] + "ed"
    return w + "ed"


def prog(w, doubling):
    if w.endswith("ie"):
        return w[:-2] + "ying"
    if w.endswith("e") and not w.endswith(("ee", "ye", "oe")) and len(w) > 2:
        return w[:-1] + "ing"
    if doubles(w, doubling):
        return w + w[-1] + "ing"
    return w + "ing"


def plural(w):
    if sibilant(w):
        return w + "es"
    if cons_y(w):
        return w[:-1] + "ies"
    return w + "s"


def usable_noun(n):
    lem = lemminflect.getAllLemmas(n)
    if "ADJ" in lem or "ADV" in lem:
        return False
    nns = first(lemminflect.getInflection(n, "NNS"))
    return nns != n or n in INVARIANT_PLURALS


def first(t):
    return t[0] if t else None


def main(outdir):
    words = [w for w in top_n_list("en", 12000) if re.fullmatch(r"[a-z]+", w)]
    verbs, nouns = [], []
    for w in words:
        lem = lemminflect.getAllLemmas(w)
        if "VERB" in lem and lem["VERB"][0] == w and len(w) > 1:
            verbs.append(w)
        if "NOUN" in lem and lem["NOUN"][0] == w and len(w) > 1:
            nouns.append(w)
    closed = {x for xs in CLOSED_CLASS.values() for x in xs} | set(AUX_VERB)
    noun_candidates = set(nouns)
    verbs = [v for v in verbs if v not in closed and v not in SKIP][:450]
    nouns = [n for n in nouns if n not in closed and n not in SKIP
             and usable_noun(n)][:650]
    for v in EXTRA_VERBS:
        if v not in verbs:
            verbs.append(v)
    for n in EXTRA_NOUNS:
        if n not in nouns:
            nouns.append(n)

    # Stressed-final bisyllables that double their final consonant.
    doubling = set()
    for v in verbs:
        vbd = first(lemminflect.getInflection(v, "VBD"))
        if (vbd == v + v[-1] + "ed" and not doubles(v, set())
                and syllables(v) >= 2):
            doubling.add(v)

    irregular_verbs = {}
    for v in verbs + ["be", "have", "do"]:
        got = {t: lemminflect.getInflection(v, t) for t in
               ("VBD", "VBN", "VBZ", "VBG")}
        if v == "be":
            got["VBZ"] = ("is", "am", "are")
        rule = {"VBD": past(v, doubling), "VBN": past(v, doubling),
                "VBZ": third(v), "VBG": prog(v, doubling)}
        slots = []
        differs = False
        for t in ("VBD", "VBN", "VBZ", "VBG"):
            forms = got[t][:3] if v == "be" else got[t][:1]
            if not forms:
                forms = (rule[t],)
            if v == "be" and t == "VBD":
                forms = got[t]
            if forms != (rule[t],):
                differs = True
            slots.append("/".join(forms))
        if differs:
            irregular_verbs[v] = slots

    irregular_nouns = {}
    for n in nouns:
        nns = first(lemminflect.getInflection(n, "NNS"))
        if nns == n and n not in INVARIANT_PLURALS:
            continue
        if nns and nns != plural(n):
            irregular_nouns[n] = nns

    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "lemmas.tsv"), "w") as f:
        f.write("# lemma\tpos\n")
        for v in verbs:
            f.write(f"{v}\tverb\n")
        for n in nouns:
            f.write(f"{n}\tnoun\n")
    with open(os.path.join(outdir, "doubling.txt"), "w") as f:
        f.write("# verbs with stressed final syllable that double the final "
                "consonant\n")
        for v in sorted(doubling):
            f.write(v + "\n")
    with open(os.path.join(outdir, "irregular.tsv"), "w") as f:
        f.write("# lemma\tpos\tforms\n")
        f.write("# verb forms: past,past-participle,third-person,progressive; "
                "'/' separates alternates\n")
        f.write("# noun forms: plural\n")
        for v in sorted(irregular_verbs):
            f.write(f"{v}\tverb\t{','.join(irregular_verbs[v])}\n")
        for n in sorted(irregular_nouns):
            f.write(f"{n}\tnoun\t{irregular_nouns[n]}\n")

    write_lexicon(os.path.join(outdir, "lexicon.tsv"), words[:5000], verbs,
                  nouns, noun_candidates)


def tags_for(w, noun_lemmas):
    """Open-class tags for a surface form, most likely first."""
    lem = lemminflect.getAllLemmas(w)
    tags = []
    noun = "NOUN" in lem or "PROPN" in lem
    adj = "ADJ" in lem
    verb = "VERB" in lem or "AUX" in lem
    vtags = []
    if verb:
        for lemma in lem.get("VERB", ()) + lem.get("AUX", ()):
            infl = {t: lemminflect.getInflection(lemma, t) for t in
                    ("VB", "VBP", "VBZ", "VBD", "VBN", "VBG")}
            if w in infl["VBG"]:
                vtags.append("VERB_PROG")
            if (w in infl["VB"] or w in infl["VBP"] or w in infl["VBZ"]
                    or w in infl["VBD"]):
                vtags.append("VERB_ACT")
            if w in infl["VBN"]:
                vtags.append("VERB_PASTPART")
    vtags = list(dict.fromkeys(vtags))
    if w.endswith("ing") and "VERB_PROG" in vtags:
        tags = vtags + (["NOUN"] if noun else []) + (["ADJ"] if adj else [])
    elif adj and not w.endswith("ed") and w not in noun_lemmas:
        tags = ["ADJ"] + (["NOUN"] if noun else []) + vtags
    elif noun:
        tags = ["NOUN"] + vtags + (["ADJ"] if adj else [])
    else:
        tags = vtags + (["ADJ"] if adj else [])
    if not tags and "ADV" in lem:
        tags = ["ADV"]
    return tags


def write_lexicon(path, top, verbs, nouns, noun_candidates):
    entries = {}
    for tag, ws in CLOSED_CLASS.items():
        for w in ws:
            entries.setdefault(w, []).append(tag)
    for w in AUX_VERB:
        entries[w] = ["AUX", "VERB_PASTPART" if w == "done" else "VERB_ACT"]
    for w in PROPN:
        entries[w] = ["PROPN"]
    for w in PUNCT:
        entries[w] = ["PUNCT"]
    surface = list(top)
    for v in verbs:
        for t in ("VB", "VBZ", "VBD", "VBN", "VBG"):
            surface.extend(lemminflect.getInflection(v, t)[:1])
    for n in nouns:
        surface.append(n)
        surface.extend(lemminflect.getInflection(n, "NNS")[:1])
    for w in surface:
        if w in entries or not re.fullmatch(r"[a-z][a-z'-]*", w):
            continue
        tags = tags_for(w, noun_candidates)
        if tags:
            entries[w] = tags
    # Quantity nouns behave as NP heads in newswire ("a million in aid").
    for w in ("million", "billion", "percent", "thousand", "hundred"):
        entries[w] = ["NOUN", "NUM"]
    with open(path, "w") as f:
        f.write("# word\ttags (most frequent first)\n")
        for w in sorted(entries):
            f.write(f"{w}\t{','.join(dict.fromkeys(entries[w]))}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")
