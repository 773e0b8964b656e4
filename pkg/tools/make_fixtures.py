"""Regenerate the deterministic fixture set used by the test suite.

Everything here is hand-constructed and fully pinned: the sentence-pair
corpus, the frequency lexicon, the mask plans, two prediction record
files and the part-of-speech lookup.  Before writing anything, the
script re-runs the full analysis pipeline over the in-memory fixtures
and asserts every aggregate the test suite later relies on (comparison
rows, totals, ratios, the best-prediction table, case labels, the
marker list).  A failed assertion means the fixture data drifted from
the expected numbers and nothing is written.

Run from the repository root:

    python3 tools/make_fixtures.py
"""

from __future__ import annotations

import json
import math
import sys
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"

sys.path.insert(0, str(ROOT / "src"))

from lexstress.analysis import CaseLabel, MatchBase, MatchPolicy, evaluate_records, load_pos_lookup
from lexstress.corpus import load_corpus, load_plans
from lexstress.lexicon import Band, BandThresholds, BandingMode, build_lexicon, load_lexicon, save_lexicon
from lexstress.predictions import parse_records, validate_against_plan
from lexstress.report import build_bundle, build_census, load_reference_totals, render_csv_tables, render_json, render_markdown

MODEL_ID = "itbert-masked-v1"
K = 10

# ---------------------------------------------------------------------------
# Lexicon: surfaces grouped by intended band.  Counts are assigned per band
# so that rank-based and count-based assignment agree on every entry.
# ---------------------------------------------------------------------------

HIGH_SURFACES = [
    "di", "a", "è", "oggi", "ringrazio", "cortesia", "più", "occasioni",
    "dimostrata", "miei", "colleghi", "solo", "sola", "lei", "forse",
    "freddo", "può", "ove", "anima", "verde", "penso", "riprendere", "se",
    "mio", "cuore", "cuor", "primavera", "ora", "né", "concede", "incanto",
    "così", "contraddizione", "acuta", "diventa", "invece", "resto",
    "complesso", "in complesso", "dopo", "importante", "decisione",
    "riservata", "feste", "informazioni", "sue", "anche", "orientamenti",
    "democrazia", "laica", "maggiori", "libro", "questo", "Maria", "Teresa",
    "spiegano", "Mondadori", "darà", "esempi", "carità", "concreti",
    "mezzo", "petto", "tolto", "pareri", "pronte", "eseguire", "opere",
    "alla", "carne", "gioia", "segni", "toccare", "eco", "governo",
    "maggioranza", "assoluta", "voluto", "come", "puntare",
    "privatizzazione", "graduale", "ministro", "interno", "nominato",
    "senatore", "vita", "presidente", "repubblica", "viene", "primo",
    "intervento", "fare", "detto", "questi", "giorni", "attuare",
    "riforma", "ha", "io", "lavoro", "svolto", "metodo", "modo", "giusto",
    "insomma", "secondo",
]

LOW_SURFACES = [
    "tenero", "prodigio", "sognatore", "pensa", "fanciulla", "conversare",
    "generoso", "Primavera", "sordi", "soffocasti", "spasimi", "battito",
    "Diventa", "buono", "l'ha", "Ora", "darebbero", "spinte", "disse",
    "oscuri", "mature", "angosce", "rinunciando", "IMI", "interrogato",
    "Viminale", "semmai",
]

VERY_LOW_SURFACES = [
    "educerebbe", "spasmi", "ferreo", "oblioso", "aprirlo",
    # reassembly legality entries
    "indotti", "indotte", "intente", "insistenti",
    "riprenderemo", "riprenderesti", "riprenderemmo", "riprenderei",
    "riprenderebbero", "riprenderebbe",
    "aerare", "arare", "alare", "amare", "aurora", "avare",
    "l'oro", "l'amore", "l'anime", "l'ora", "l'onde", "l'oste", "l'altre",
    "pioppo", "piove", "piovra", "piova", "pioppi", "piovere",
    "com'è", "com'altri", "com'un", "com'hanno",
    "manetta", "mandata", "manmano", "mania", "manna", "manina",
    "mancina", "mantellina", "mancia",
    "stacchino", "staranno", "stagnano", "stacchi", "staglia",
    "staccano", "stagliano",
    "com'esiliano", "com'esilissimo",
    "ohimè", "oziosa", "oblio", "ode", "oppio",
    "talora",
    "lassù", "lasci", "lavi", "lavata", "lascio", "lavando",
    "cocciuti", "cocciuto",
    "pianissimi", "piantone", "piantato", "piantare", "pianure",
    "pianura", "piangente",
    "morbosi", "morbosità", "morboso",
    "studiò", "studierò",
]

RARE_ROWS = [("ritrosi", 3), ("impedite", 2), ("concepisco", 2), ("rinverdiva", 1)]

JUNK_ROWS = [
    ("www.esempio.it", 999999),
    ("1987", 55555),
    ("http://notizie.example/it", 12345),
    ("...", 777),
    ("42", 12),
]


def lexicon_rows() -> list[tuple[str, int]]:
    rows: list[tuple[str, int]] = []
    for i, surface in enumerate(HIGH_SURFACES):
        count = 65_000_000 if surface == "di" else 2_000_000 - 1000 * i
        rows.append((surface, count))
    for i, surface in enumerate(LOW_SURFACES):
        rows.append((surface, 9000 - 100 * i))
    for i, surface in enumerate(VERY_LOW_SURFACES):
        rows.append((surface, 1300 - 5 * i))
    rows.extend(RARE_ROWS)
    return rows


THRESHOLDS = BandThresholds(
    high_rank_cutoff=len(HIGH_SURFACES),
    core_vocab_size=len(HIGH_SURFACES) + len(LOW_SURFACES),
    low_count_floor=1377,
    verylow_count_floor=4,
    high_count_floor=10000,
)

# 131 printed surfaces with their expected band markers.
MARKER_LIST: list[tuple[str, str]] = (
    [(w, "°") for w in ("Oggi", "ringrazio", "cortesia", "più", "occasioni", "dimostrata", "miei", "colleghi")]
    + [("solo", "°"), ("lei", "°"), ("Forse", "°"), ("freddo", "°"),
       ("tenero", "*"), ("prodigio", "*"), ("sognatore", "*"), ("educerebbe", "**")]
    + [(w, "°") for w in ("può", "ove", "anima", "verde", "Penso", "riprendere")]
    + [("Pensa", "*"), ("fanciulla", "*"), ("conversare", "*")]
    + [("Se", "°"), ("mio", "°"), ("cuore", "°"), ("primavera", "°"),
       ("generoso", "*"), ("Primavera", "*"), ("sordi", "*"), ("spasmi", "**")]
    + [("ora", "°"), ("Né", "°"), ("concede", "°"), ("incanto", "°"),
       ("battito", "*"), ("ferreo", "**"), ("oblioso", "**")]
    + [("più", "°"), ("così", "°"), ("contraddizione", "°"), ("acuta", "°"), ("Diventa", "*")]
    + [("invece", "°"), ("resto", "°"), ("complesso", "°"), ("Buono", "*")]
    + [("dopo", "°"), ("importante", "°"), ("decisione", "°"), ("riservata", "°"),
       ("feste", "°"), ("Ghitti", "***<ukn>")]
    + [("ora", "°"), ("aprirlo", "**")]
    + [(w, "°") for w in ("informazioni", "sue", "anche", "orientamenti", "democrazia", "laica", "maggiori")]
    + [("spinte", "*"), ("darebbero", "*")]
    + [(w, "°") for w in ("libro", "questo", "Maria", "Teresa", "spiegano", "esempi", "carità", "concreti")]
    + [("mezzo", "°"), ("cuore", "°"), ("petto", "°"), ("tolto", "°"), ("Disse", "*")]
    + [(w, "°") for w in ("pareri", "pronte", "mezzo", "eseguire", "opere")]
    + [("ritrosi", "***"), ("impedite", "***")]
    + [(w, "°") for w in ("alla", "carne", "gioia", "segni", "toccare", "eco")]
    + [("oscuri", "*"), ("mature", "*"), ("angosce", "*"), ("rinverdiva", "***")]
    + [(w, "°") for w in ("governo", "maggioranza", "assoluta", "voluto", "come", "puntare", "privatizzazione")]
    + [("rinunciando", "*"), ("IMI", "*")]
    + [(w, "°") for w in ("ministro", "interno", "nominato", "senatore", "vita", "presidente", "Repubblica", "viene")]
    + [("interrogato", "*"), ("Viminale", "*")]
    + [(w, "°") for w in ("Primo", "intervento", "fare", "detto", "questi", "giorni", "attuare")]
    + [(w, "°") for w in ("lavoro", "metodo", "modo", "giusto", "fare", "insomma", "io", "svolto")]
    + [("concepisco", "***")]
)

MARKER_TO_BAND = {
    "°": Band.HIGH,
    "*": Band.LOW,
    "**": Band.VERY_LOW,
    "***": Band.RARE,
    "***<ukn>": Band.UNKNOWN,
}

# ---------------------------------------------------------------------------
# Corpus.  Tokens are (surface, pos, is_content) with an optional fourth
# element: a multiword phrase annotation used by the best-prediction table.
# ---------------------------------------------------------------------------

CONTENT_POS = {"NOUN", "VERB", "ADJ", "PROPN"}


def _tok(surface, pos, content, phrase=None):
    token = {"surface": surface, "pos": pos, "is_content": content}
    if "'" in surface and pos != "PUNCT":
        token["is_elided"] = True
    if phrase:
        token["phrase"] = phrase
    return token


S = {}  # sentence id -> (domain, labels, tokens)

S["1.B"] = ("Newswire", ["PpAdjunctPreposing"], [
    _tok("Oggi", "ADV", False), _tok("ringrazio", "VERB", True),
    _tok("della", "ADP", False), _tok("cortesia", "NOUN", True),
    _tok("in", "ADP", False), _tok("più", "ADV", False),
    _tok("occasioni", "NOUN", True), _tok("dimostrata", "VERB", True),
    _tok("a", "ADP", False), _tok("me", "PRON", False),
    _tok("e", "CCONJ", False), _tok("ai", "ADP", False),
    _tok("miei", "DET", False), _tok("colleghi", "NOUN", True),
])
S["1.Bc"] = ("Newswire", [], [
    _tok("Oggi", "ADV", False), _tok("ringrazio", "VERB", True),
    _tok("della", "ADP", False), _tok("cortesia", "NOUN", True),
    _tok("dimostrata", "VERB", True), _tok("in", "ADP", False),
    _tok("più", "ADV", False), _tok("occasioni", "NOUN", True),
    _tok("a", "ADP", False), _tok("me", "PRON", False),
    _tok("e", "CCONJ", False), _tok("ai", "ADP", False),
    _tok("miei", "DET", False), _tok("colleghi", "NOUN", True),
])

S["2.A"] = ("Poetry", ["ObjectFronting"], [
    _tok("Lei", "PRON", False), _tok("sola", "ADJ", True),
    _tok("forse", "ADV", False), _tok("il", "DET", False),
    _tok("freddo", "ADJ", True), _tok("sognatore", "NOUN", True),
    _tok("educerebbe", "VERB", True), _tok("al", "ADP", False),
    _tok("tenero", "ADJ", True), _tok("prodigio", "NOUN", True),
])
S["2.Ac"] = ("Poetry", [], [
    _tok("Forse", "ADV", False), _tok("sola", "ADJ", True),
    _tok("lei", "PRON", False), _tok("educerebbe", "VERB", True),
    _tok("il", "DET", False), _tok("freddo", "ADJ", True),
    _tok("sognatore", "NOUN", True), _tok("al", "ADP", False),
    _tok("tenero", "ADJ", True), _tok("prodigio", "NOUN", True),
])

S["3.A"] = ("Poetry", ["VerbLeftExtraction", "SubjectRightDislocation"], [
    _tok("Penso", "VERB", True), _tok("a", "ADP", False),
    _tok("un", "DET", False), _tok("verde", "ADJ", True),
    _tok("giardino", "NOUN", True), _tok("ove", "ADV", False),
    _tok("con", "ADP", False), _tok("te", "PRON", False),
    _tok("riprendere", "VERB", True), _tok("può", "AUX", False),
    _tok("a", "ADP", False), _tok("conversare", "VERB", True),
    _tok("l'anima", "NOUN", True), _tok("fanciulla", "ADJ", True),
])
S["3.Ac"] = ("Poetry", [], [
    _tok("Penso", "VERB", True), _tok("a", "ADP", False),
    _tok("un", "DET", False), _tok("verde", "ADJ", True),
    _tok("giardino", "NOUN", True), _tok("ove", "ADV", False),
    _tok("l'anima", "NOUN", True), _tok("fanciulla", "ADJ", True),
    _tok("può", "AUX", False), _tok("riprendere", "VERB", True),
    _tok("a", "ADP", False), _tok("conversare", "VERB", True),
    _tok("con", "ADP", False), _tok("te", "PRON", False),
])

S["4.A"] = ("Poetry", ["SubjectObjectFronting"], [
    _tok("Se", "SCONJ", False), _tok("primavera", "NOUN", True),
    _tok("il", "DET", False), _tok("mio", "DET", False),
    _tok("cuor", "NOUN", True), _tok("generoso", "ADJ", True),
    _tok("soffocasti", "VERB", True), _tok("di", "ADP", False),
    _tok("spasimi", "NOUN", True), _tok("sordi", "ADJ", True),
])
S["4.Ac"] = ("Poetry", [], [
    _tok("Primavera", "NOUN", True), _tok("se", "SCONJ", False),
    _tok("soffocasti", "VERB", True), _tok("il", "DET", False),
    _tok("mio", "DET", False), _tok("cuor", "NOUN", True),
    _tok("generoso", "ADJ", True), _tok("di", "ADP", False),
    _tok("spasimi", "NOUN", True), _tok("sordi", "ADJ", True),
])

S["5.A"] = ("Poetry", ["ObjectFronting", "SubjectObjectFronting", "PpSpecExtractionFronted"], [
    _tok("Né", "CCONJ", False), _tok("l'oblioso", "ADJ", True),
    _tok("incanto", "NOUN", True), _tok("dell'", "ADP", False),
    _tok("ora", "NOUN", True), _tok("il", "DET", False),
    _tok("ferreo", "ADJ", True), _tok("battito", "NOUN", True),
    _tok("concede", "VERB", True),
])
S["5.Ac"] = ("Poetry", [], [
    _tok("Né", "CCONJ", False), _tok("l'oblioso", "ADJ", True),
    _tok("incanto", "NOUN", True), _tok("concede", "VERB", True),
    _tok("il", "DET", False), _tok("ferreo", "ADJ", True),
    _tok("battito", "NOUN", True), _tok("dell'", "ADP", False),
    _tok("ora", "NOUN", True),
])

S["6.B"] = ("Newswire", ["SubjectRightDislocation"], [
    _tok("Diventa", "VERB", True), _tok("così", "ADV", False),
    _tok("più", "ADV", False), _tok("acuta", "ADJ", True),
    _tok("la", "DET", False), _tok("contraddizione", "NOUN", True),
])
S["6.Bc"] = ("Newswire", [], [
    _tok("La", "DET", False), _tok("contraddizione", "NOUN", True),
    _tok("diventa", "VERB", True), _tok("così", "ADV", False),
    _tok("più", "ADV", False), _tok("acuta", "ADJ", True),
])

S["7.B"] = ("Newswire", ["ArgumentInversion"], [
    _tok("Buono", "ADJ", True), _tok("invece", "ADV", False),
    _tok("in complesso", "ADV", False), _tok("il", "DET", False),
    _tok("resto", "NOUN", True),
])
S["7.Bc"] = ("Newswire", [], [
    _tok("Il", "DET", False), _tok("resto", "NOUN", True),
    _tok("invece", "ADV", False), _tok("è", "AUX", False),
    _tok("buono", "ADJ", True), _tok("in complesso", "ADV", False),
])

S["8.B"] = ("Newswire", ["CliticLeftDislocation"], [
    _tok("Una", "DET", False), _tok("decisione", "NOUN", True),
    _tok("importante", "ADJ", True), _tok("Ghitti", "PROPN", False),
    _tok("l'ha", "AUX", False), _tok("riservata", "VERB", True),
    _tok("a", "ADP", False), _tok("dopo", "ADV", False),
    _tok("le", "DET", False), _tok("feste", "NOUN", True),
])
S["8.Bc"] = ("Newswire", [], [
    _tok("Ghitti", "PROPN", False), _tok("ha", "AUX", False),
    _tok("riservato", "VERB", True), _tok("una", "DET", False),
    _tok("decisione", "NOUN", True), _tok("importante", "ADJ", True),
    _tok("a", "ADP", False), _tok("dopo", "ADV", False),
    _tok("le", "DET", False), _tok("feste", "NOUN", True),
])

S["9.B"] = ("Newswire", ["ArgumentInversion"], [
    _tok("L'", "DET", False), _tok("importante", "ADJ", True),
    _tok("ora", "ADV", False), _tok("è", "AUX", False),
    _tok("aprirlo", "VERB", True), _tok("di", "ADP", False),
    _tok("più", "ADV", False),
])
S["9.Bc"] = ("Newswire", [], [
    _tok("Ora", "ADV", False), _tok("è", "AUX", False),
    _tok("importante", "ADJ", True), _tok("aprirlo", "VERB", True),
    _tok("di", "ADP", False), _tok("più", "ADV", False),
])

S["10.B"] = ("Newswire", ["ObjectRightDislocation"], [
    _tok("Le", "DET", False), _tok("sue", "DET", False),
    _tok("informazioni", "NOUN", True), _tok("darebbero", "VERB", True),
    _tok("anche", "ADV", False), _tok("agli", "ADP", False),
    _tok("orientamenti", "NOUN", True), _tok("di", "ADP", False),
    _tok("democrazia", "NOUN", True), _tok("laica", "ADJ", True),
    _tok("maggiori", "ADJ", True), _tok("spinte", "NOUN", True),
])
S["10.Bc"] = ("Newswire", [], [
    _tok("Le", "DET", False), _tok("sue", "DET", False),
    _tok("informazioni", "NOUN", True), _tok("darebbero", "VERB", True),
    _tok("maggiori", "ADJ", True), _tok("spinte", "NOUN", True),
    _tok("anche", "ADV", False), _tok("agli", "ADP", False),
    _tok("orientamenti", "NOUN", True), _tok("di", "ADP", False),
    _tok("democrazia", "NOUN", True), _tok("laica", "ADJ", True),
])

S["11.B"] = ("Newswire", ["ParentheticalInsertion", "AdjectiveRightExtraction"], [
    _tok("In", "ADP", False), _tok("questo", "DET", False),
    _tok("libro", "NOUN", True), _tok("Maria", "PROPN", True),
    _tok("Teresa", "PROPN", True), _tok(",", "PUNCT", False),
    _tok("spiegano", "VERB", True), _tok("alla", "ADP", False),
    _tok("Mondadori", "PROPN", True), _tok(",", "PUNCT", False),
    _tok("darà", "VERB", True), _tok("esempi", "NOUN", True, "esempi di carità"),
    _tok("di", "ADP", False), _tok("carità", "NOUN", True, "esempi di carità"),
    _tok("concreti", "ADJ", True),
])
S["11.Bc"] = ("Newswire", [], [
    _tok("In", "ADP", False), _tok("questo", "DET", False),
    _tok("libro", "NOUN", True), _tok("Maria", "PROPN", True),
    _tok("Teresa", "PROPN", True), _tok("darà", "VERB", True),
    _tok("esempi", "NOUN", True, "esempi di carità"), _tok("di", "ADP", False),
    _tok("carità", "NOUN", True, "esempi di carità"), _tok("concreti", "ADJ", True),
    _tok(",", "PUNCT", False), _tok("spiegano", "VERB", True),
    _tok("alla", "ADP", False), _tok("Mondadori", "PROPN", True),
])

S["12.A"] = ("Poetry", ["VerbRightExtraction"], [
    _tok("Disse", "VERB", True), _tok("che", "SCONJ", False),
    _tok("gli", "PRON", False), _tok("hanno", "AUX", False),
    _tok("il", "DET", False), _tok("cor", "NOUN", True),
    _tok("di", "ADP", False), _tok("mezzo", "NOUN", True),
    _tok("il", "DET", False), _tok("petto", "NOUN", True),
    _tok("tolto", "VERB", True),
])
S["12.Ac"] = ("Poetry", [], [
    _tok("Disse", "VERB", True), _tok("che", "SCONJ", False),
    _tok("gli", "PRON", False), _tok("hanno", "AUX", False),
    _tok("tolto", "VERB", True), _tok("il", "DET", False),
    _tok("cuore", "NOUN", True), _tok("di", "ADP", False),
    _tok("mezzo", "NOUN", True), _tok("il", "DET", False),
    _tok("petto", "NOUN", True),
])

S["13.A"] = ("Poetry", ["AdjectiveExtraction", "PpAdjunctPreposing"], [
    _tok("I", "DET", False), _tok("ritrosi", "ADJ", True),
    _tok("pareri", "NOUN", True), _tok("e", "CCONJ", False),
    _tok("le", "DET", False), _tok("non", "ADV", False),
    _tok("pronte", "ADJ", True), _tok("e", "CCONJ", False),
    _tok("in", "ADP", False), _tok("mezzo", "NOUN", True),
    _tok("a", "ADP", False), _tok("l'", "DET", False),
    _tok("eseguire", "VERB", True), _tok("opere", "NOUN", True),
    _tok("impedito", "VERB", True),
])
S["13.Ac"] = ("Poetry", [], [
    _tok("I", "DET", False), _tok("pareri", "NOUN", True),
    _tok("ritrosi", "ADJ", True), _tok("e", "CCONJ", False),
    _tok("le", "DET", False), _tok("non", "ADV", False),
    _tok("pronte", "ADJ", True), _tok("e", "CCONJ", False),
    _tok("impedito", "VERB", True), _tok("in", "ADP", False),
    _tok("mezzo", "NOUN", True), _tok("a", "ADP", False),
    _tok("l'", "DET", False), _tok("eseguire", "VERB", True),
    _tok("opere", "NOUN", True),
])

S["14.A"] = ("Poetry", ["AdjectiveExtraction", "AdjectiveRightExtraction", "PpSpecRightStranding"], [
    _tok("Un'", "DET", False), _tok("eco", "NOUN", True),
    _tok("di", "ADP", False), _tok("mature", "ADJ", True),
    _tok("angosce", "NOUN", True), _tok("rinverdiva", "VERB", True),
    _tok("a", "ADP", False), _tok("toccar", "VERB", True),
    _tok("segni", "NOUN", True), _tok("alla", "ADP", False),
    _tok("carne", "NOUN", True), _tok("oscuri", "ADJ", True),
    _tok("di", "ADP", False), _tok("gioia", "NOUN", True),
])
S["14.Ac"] = ("Poetry", [], [
    _tok("Un'", "DET", False), _tok("eco", "NOUN", True),
    _tok("di", "ADP", False), _tok("mature", "ADJ", True),
    _tok("angosce", "NOUN", True), _tok("rinverdiva", "VERB", True),
    _tok("a", "ADP", False), _tok("toccare", "VERB", True),
    _tok("segni", "NOUN", True), _tok("oscuri", "ADJ", True),
    _tok("di", "ADP", False), _tok("gioia", "NOUN", True),
    _tok("alla", "ADP", False), _tok("carne", "NOUN", True),
])

S["15.B"] = ("Newswire", ["DoubleParenthetical"], [
    _tok("Il", "DET", False), _tok("governo", "NOUN", True),
    _tok(",", "PUNCT", False), _tok("rinunciando", "VERB", True),
    _tok(",", "PUNCT", False), _tok("di", "ADP", False),
    _tok("fatto", "NOUN", False), _tok(",", "PUNCT", False),
    _tok("alla", "ADP", False), _tok("maggioranza", "NOUN", True),
    _tok("assoluta", "ADJ", True), _tok(",", "PUNCT", False),
    _tok("ha", "AUX", False, "ha voluto"), _tok("voluto", "VERB", True),
    _tok(",", "PUNCT", False), _tok("come", "SCONJ", False, "come nell' IMI"),
    _tok("nell'", "ADP", False), _tok("IMI", "PROPN", False),
    _tok(",", "PUNCT", False), _tok("puntare", "VERB", True),
    _tok("a", "ADP", False), _tok("una", "DET", False),
    _tok("privatizzazione", "NOUN", True), _tok("graduale", "ADJ", True),
    _tok(".", "PUNCT", False),
])
S["15.Bc"] = ("Newswire", [], [
    _tok("Il", "DET", False), _tok("governo", "NOUN", True),
    _tok("ha", "AUX", False, "ha voluto"), _tok("voluto", "VERB", True),
    _tok("puntare", "VERB", True), _tok("a", "ADP", False),
    _tok("una", "DET", False), _tok("privatizzazione", "NOUN", True),
    _tok("graduale", "ADJ", True), _tok(",", "PUNCT", False),
    _tok("rinunciando", "VERB", True), _tok("di", "ADP", False),
    _tok("fatto", "NOUN", False), _tok("alla", "ADP", False),
    _tok("maggioranza", "NOUN", True), _tok("assoluta", "ADJ", True),
    _tok(",", "PUNCT", False), _tok("come", "SCONJ", False, "come nell' IMI"),
    _tok("nell'", "ADP", False), _tok("IMI", "PROPN", False),
    _tok(".", "PUNCT", False),
])

S["16.B"] = ("Newswire", ["ParentheticalInsertion", "DoubleParenthetical"], [
    _tok("Il", "DET", False), _tok("ministro", "NOUN", True),
    _tok("dell'", "ADP", False), _tok("interno", "NOUN", True),
    _tok(",", "PUNCT", False), _tok("interrogato", "VERB", True),
    _tok("sulle", "ADP", False), _tok("prime", "ADJ", False),
    _tok("proprio", "ADV", False), _tok("al", "ADP", False),
    _tok("Viminale", "PROPN", True), _tok(",", "PUNCT", False),
    _tok("viene", "AUX", False, "viene nominato"), _tok("poi", "ADV", False),
    _tok("nominato", "VERB", True), _tok("senatore", "NOUN", True, "senatore a vita"),
    _tok("a", "ADP", False), _tok("vita", "NOUN", True, "senatore a vita"),
    _tok("dal", "ADP", False), _tok("presidente", "NOUN", True),
    _tok("della", "ADP", False), _tok("Repubblica", "NOUN", True),
])
S["16.Bc"] = ("Newswire", [], [
    _tok("Il", "DET", False), _tok("ministro", "NOUN", True),
    _tok("dell'", "ADP", False), _tok("interno", "NOUN", True),
    _tok("viene", "AUX", False, "viene nominato"), _tok("poi", "ADV", False),
    _tok("nominato", "VERB", True), _tok("senatore", "NOUN", True, "senatore a vita"),
    _tok("a", "ADP", False), _tok("vita", "NOUN", True, "senatore a vita"),
    _tok("dal", "ADP", False), _tok("presidente", "NOUN", True),
    _tok("della", "ADP", False), _tok("Repubblica", "NOUN", True),
    _tok(",", "PUNCT", False), _tok("interrogato", "VERB", True),
    _tok("sulle", "ADP", False), _tok("prime", "ADJ", False),
    _tok("proprio", "ADV", False), _tok("al", "ADP", False),
    _tok("Viminale", "PROPN", True),
])

S["17.B"] = ("Newswire", ["ArgumentInversion"], [
    _tok("Primo", "ADJ", True), _tok("intervento", "NOUN", True, "intervento da fare"),
    _tok("da", "ADP", False), _tok("fare", "VERB", True, "intervento da fare"),
    _tok("ha", "AUX", False, "ha detto"), _tok("detto", "VERB", True, "ha detto"),
    _tok("in", "ADP", False), _tok("questi", "DET", False, "questi giorni"),
    _tok("giorni", "NOUN", True, "questi giorni"), _tok("è", "AUX", False),
    _tok("di", "ADP", False), _tok("attuare", "VERB", True),
    _tok("la", "DET", False), _tok("riforma", "NOUN", True),
    _tok(".", "PUNCT", False),
])
S["17.Bc"] = ("Newswire", [], [
    _tok("Il", "DET", False), _tok("Primo", "ADJ", True),
    _tok("intervento", "NOUN", True, "intervento da fare"), _tok("da", "ADP", False),
    _tok("fare", "VERB", True, "intervento da fare"), _tok("è", "AUX", False),
    _tok("di", "ADP", False), _tok("attuare", "VERB", True),
    _tok("la", "DET", False), _tok("riforma", "NOUN", True),
    _tok("ha", "AUX", False, "ha detto"), _tok("detto", "VERB", True, "ha detto"),
    _tok("in", "ADP", False), _tok("questi", "DET", False, "questi giorni"),
    _tok("giorni", "NOUN", True, "questi giorni"),
])

S["18.B"] = ("Newswire", ["CliticLeftDislocation", "HangingTopic"], [
    _tok("Io", "PRON", False), _tok(",", "PUNCT", False),
    _tok("il", "DET", False), _tok("lavoro", "NOUN", True),
    _tok("svolto", "VERB", True), _tok("con", "ADP", False),
    _tok("questo", "DET", False), _tok("metodo", "NOUN", True),
    _tok("non", "ADV", False), _tok("lo", "PRON", False),
    _tok("concepisco", "VERB", True), _tok(",", "PUNCT", False),
    _tok("non", "ADV", False), _tok("è", "AUX", False),
    _tok("il", "DET", False), _tok("modo", "NOUN", True, "modo giusto"),
    _tok("giusto", "ADJ", True), _tok("di", "ADP", False),
    _tok("fare", "VERB", True), _tok("lavoro", "NOUN", True),
    _tok("insomma", "ADV", False), _tok(".", "PUNCT", False),
])
S["18.Bc"] = ("Newswire", [], [
    _tok("Io", "PRON", False), _tok("non", "ADV", False),
    _tok("concepisco", "VERB", True), _tok("il", "DET", False),
    _tok("lavoro", "NOUN", True), _tok("svolto", "VERB", True),
    _tok("con", "ADP", False), _tok("questo", "DET", False),
    _tok("metodo", "NOUN", True), _tok(",", "PUNCT", False),
    _tok("non", "ADV", False), _tok("è", "AUX", False),
    _tok("il", "DET", False), _tok("modo", "NOUN", True, "modo giusto"),
    _tok("giusto", "ADJ", True), _tok("di", "ADP", False),
    _tok("fare", "VERB", True), _tok("lavoro", "NOUN", True),
    _tok("insomma", "ADV", False), _tok(".", "PUNCT", False),
])

PAIRS = [
    {"noncanonical": "1.B", "canonical": "1.Bc"},
    {"noncanonical": "2.A", "canonical": "2.Ac"},
    {"noncanonical": "3.A", "canonical": "3.Ac",
     "freq_words": ["può", "ove", "anima", "verde", "Penso", "riprendere",
                    "Pensa", "fanciulla", "conversare"]},
    {"noncanonical": "4.A", "canonical": "4.Ac"},
    {"noncanonical": "5.A", "canonical": "5.Ac",
     "freq_words": ["Né", "incanto", "ora", "concede", "battito", "ferreo", "oblioso"]},
    {"noncanonical": "6.B", "canonical": "6.Bc"},
    {"noncanonical": "7.B", "canonical": "7.Bc", "added_words": ["è"]},
    {"noncanonical": "8.B", "canonical": "8.Bc",
     "substitutions": {"riservata": "riservato"},
     "notes": "Ghitti is annotated as a function token: proper names stay unmasked."},
    {"noncanonical": "9.B", "canonical": "9.Bc",
     "freq_words": ["importante", "ora", "è", "più", "Ora"]},
    {"noncanonical": "10.B", "canonical": "10.Bc"},
    {"noncanonical": "11.B", "canonical": "11.Bc"},
    {"noncanonical": "12.A", "canonical": "12.Ac",
     "freq_words": ["mezzo", "cuore", "petto", "tolto", "Disse"],
     "substitutions": {"cor": "cuore"}},
    {"noncanonical": "13.A", "canonical": "13.Ac"},
    {"noncanonical": "14.A", "canonical": "14.Ac",
     "freq_words": ["alla", "carne", "gioia", "segni", "toccare", "eco",
                    "oscuri", "mature", "angosce", "rinverdiva"],
     "substitutions": {"toccar": "toccare"}},
    {"noncanonical": "15.B", "canonical": "15.Bc",
     "freq_words": ["governo", "rinunciando", "maggioranza", "assoluta",
                    "voluto", "come", "puntare", "privatizzazione",
                    "graduale", "IMI"],
     "notes": "IMI and the idiomatic 'di fatto' are annotated as function tokens."},
    {"noncanonical": "16.B", "canonical": "16.Bc",
     "notes": "The idiomatic 'sulle prime' is annotated as function tokens."},
    {"noncanonical": "17.B", "canonical": "17.Bc",
     "freq_words": ["Primo", "intervento", "fare", "detto", "questi",
                    "giorni", "attuare", "riforma", "ha", "è"]},
    {"noncanonical": "18.B", "canonical": "18.Bc"},
]

LISTED_FUNCTION = {
    "1.B": [0, 5, 12], "1.Bc": [0, 6, 12],
    "2.A": [0, 2], "2.Ac": [0, 2],
    "3.A": [5, 9], "3.Ac": [5, 8],
    "4.A": [0, 3], "4.Ac": [1, 4],
    "6.B": [1, 2], "6.Bc": [3, 4],
    "7.B": [1, 2], "7.Bc": [2, 5],
    "8.B": [4, 6, 7], "8.Bc": [1, 6, 7],
    "9.B": [2, 6], "9.Bc": [0, 5],
    "10.B": [1, 4], "10.Bc": [1, 6],
    "11.B": [1], "11.Bc": [1],
    "12.A": [2, 3], "12.Ac": [2, 3],
    "15.B": [12, 15], "15.Bc": [2, 17],
    "16.B": [12], "16.Bc": [4],
    "17.B": [4, 7], "17.Bc": [10, 13],
    "18.B": [0, 20], "18.Bc": [0, 18],
}

# ---------------------------------------------------------------------------
# Out-of-vocabulary corpus: three full sentences reused from the pair corpus
# plus minimal three-token carriers, one per studied gold word.
# ---------------------------------------------------------------------------

OOV_STUBS = [
    ("oov-opra.A", [("l'agil", "ADJ", True), ("opra", "NOUN", True), ("de", "ADP", False)]),
    ("oov-silenzi.A", [("sovrumani", "ADJ", True), ("silenzi", "NOUN", True), ("e", "CCONJ", False)]),
    ("oov-canto.A", [("il", "DET", False), ("canto", "NOUN", True), ("avrai", "VERB", True)]),
    ("oov-cantò.A", [("acque", "NOUN", True), ("cantò", "VERB", True), ("fatali", "ADJ", True)]),
    ("oov-bove.A", [("pio", "ADJ", True), ("bove", "NOUN", True), ("e", "CCONJ", False)]),
    ("oov-esili.A", [("com'", "ADP", False), ("esili", "ADJ", True), ("pensieri", "NOUN", True)]),
    ("oov-cantando.A", [("man", "ADV", False), ("cantando", "VERB", True), ("fassi", "VERB", True)]),
    ("oov-come.A", [("sta", "VERB", True), ("come", "SCONJ", False), ("d'autunno", "NOUN", True)]),
    ("oov-pensieri.A", [("com'esili", "ADJ", True), ("pensieri", "NOUN", True), ("nel", "ADP", False)]),
    ("oov-sovrumani.A", [("e", "CCONJ", False), ("sovrumani", "ADJ", True), ("silenzi", "NOUN", True)]),
    ("oov-tenerella.A", [("o", "INTJ", False), ("tenerella", "ADJ", True), (".", "PUNCT", False)]),
    ("oov-combattuta.A", [("morbo", "NOUN", True), ("combattuta", "VERB", True), ("e", "CCONJ", False)]),
    ("oov-lasciando.A", [("talor", "ADV", False), ("lasciando", "VERB", True), ("e", "CCONJ", False)]),
    ("oov-leggiadri.A", [("studi", "NOUN", True), ("leggiadri", "ADJ", True), ("talor", "ADV", False)]),
    ("oov-attende.A", [("La", "DET", False), ("attende", "VERB", True), ("a", "ADP", False)]),
    ("oov-aguzzi.A", [("cocci", "NOUN", True), ("aguzzi", "ADJ", True), ("di", "ADP", False)]),
    ("oov-silenzio.A", [("pian", "ADV", False), ("silenzio", "NOUN", True), ("verde", "ADJ", True)]),
    ("oov-boundary.A", [("Ascolta", "VERB", True), ("il", "DET", False), ("vento", "NOUN", True)]),
]

# ---------------------------------------------------------------------------
# Prediction records.  Pinned candidate lists per (sentence, index); every
# other planned slot gets a deterministic all-full-word miss.  Kinds:
# "f" full word, "p" continuation piece, "s" special token.
# ---------------------------------------------------------------------------

FILLER_POOL = [
    ("tempo", "NOUN"), ("casa", "NOUN"), ("mano", "NOUN"), ("parte", "NOUN"),
    ("mondo", "NOUN"), ("giorno", "NOUN"), ("uomo", "NOUN"), ("cosa", "NOUN"),
    ("punto", "NOUN"), ("momento", "NOUN"), ("strada", "NOUN"), ("notte", "NOUN"),
    ("acqua", "NOUN"), ("luce", "NOUN"), ("terra", "NOUN"), ("porta", "NOUN"),
    ("voce", "NOUN"), ("mare", "NOUN"), ("sole", "NOUN"), ("testa", "NOUN"),
    ("parole", "NOUN"), ("storia", "NOUN"), ("paese", "NOUN"), ("città", "NOUN"),
    ("piazza", "NOUN"), ("treno", "NOUN"), ("carta", "NOUN"), ("scuola", "NOUN"),
    ("chiesa", "NOUN"), ("campagna", "NOUN"), ("montagna", "NOUN"), ("fiume", "NOUN"),
    ("ponte", "NOUN"), ("torre", "NOUN"), ("stella", "NOUN"), ("luna", "NOUN"),
    ("vento", "NOUN"), ("neve", "NOUN"), ("pioggia", "NOUN"), ("sera", "NOUN"),
]

PINNED_POS = {
    "Grazie": "INTJ", "sensibilità": "NOUN", "coscienza": "NOUN", "gioia": "NOUN",
    "certezze": "NOUN", "garanzie": "NOUN", "informazioni": "NOUN",
    "opportunità": "NOUN", "presa": "VERB", "fatta": "VERB", "presentata": "VERB",
    "vero": "ADJ", "oggi": "ADV", "poi": "ADV", "non": "ADV", "farlo": "VERB",
    "dirlo": "VERB", "vederlo": "VERB", "prenderlo": "VERB", "leggerlo": "VERB",
    "ma": "CCONJ", "e": "CCONJ", "però": "CCONJ", "più": "ADV", "ed": "CCONJ",
    "diverso": "ADJ", "risolto": "VERB", "compiuto": "VERB", "secondario": "ADJ",
    "positivo": "ADJ", "aveva": "AUX", "avrebbe": "AUX", "è": "AUX",
    "anche": "ADV", "Costituzione": "NOUN", "il": "DET", "un": "DET",
    "passo": "NOUN", "fare": "VERB", "cristiana": "ADJ", "'": "PUNCT",
    "civile": "ADJ", "esemplare": "ADJ", "pastorale": "ADJ", "nuova": "ADJ",
    "vera": "ADJ", "di": "ADP", "che": "PRON", "pieni": "ADJ", "piena": "ADJ",
    ",": "PUNCT", "pieno": "ADJ", "fino": "ADP", "intorno": "ADV",
    "dentro": "ADV", "sino": "ADP", "vicino": "ADV", "a": "ADP", "la": "DET",
    "ritmo": "NOUN", "passare": "VERB", "procedere": "VERB", "battito": "NOUN",
    "silenzio": "NOUN", "riposo": "NOUN", "senso": "NOUN", "pensiero": "NOUN",
    "suono": "NOUN", "suoi": "DET", "buoni": "ADJ", "mal": "ADV", "loro": "PRON",
    ".": "PUNCT", "buone": "ADJ", "inutili": "ADJ", "nuove": "ADJ",
    "pubbliche": "ADJ", "fossi": "VERB", "avessi": "VERB", "fosse": "VERB",
    "con": "ADP", "solo": "ADJ", "credo": "VERB", "so": "VERB", "dico": "VERB",
    "vedo": "VERB", "Pensa": "VERB", "penso": "VERB", "bella": "ADJ",
    "dolce": "ADJ", "forse": "ADV", "lei": "PRON", "cuore": "NOUN",
    "tolto": "VERB", "eco": "NOUN", "giardino": "NOUN", "ove": "ADV",
    "può": "AUX", "mio": "DET", "cuor": "NOUN", "diventa": "VERB",
    "così": "ADV", "acuta": "ADJ", "dopo": "ADV", "ora": "ADV",
    "maggiori": "ADJ", "libro": "NOUN", "esempi": "NOUN", "governo": "NOUN",
    "maggioranza": "NOUN", "assoluta": "ADJ", "ha": "AUX", "voluto": "VERB",
    "puntare": "VERB", "come": "SCONJ", "ministro": "NOUN", "viene": "AUX",
    "senatore": "NOUN", "vita": "NOUN", "questi": "DET", "giorni": "NOUN",
    "riforma": "NOUN", "detto": "VERB", "lavoro": "NOUN", "metodo": "NOUN",
    "modo": "NOUN", "questo": "DET", "Maria": "PROPN", "Teresa": "PROPN",
    "occasioni": "NOUN", "miei": "DET", "ringrazio": "VERB",
    "dimostrata": "VERB", "importante": "ADJ", "costo": "NOUN",
    "prezzo": "NOUN", "corpo": "NOUN", "campo": "NOUN", "fondo": "NOUN",
    "lato": "NOUN", "potrà": "VERB", "deve": "VERB", "vivere": "VERB",
    "riposare": "VERB", "rumore": "NOUN", "nome": "NOUN", "verso": "NOUN",
    "dono": "NOUN", "regalo": "NOUN", "fiore": "NOUN", "cielo": "NOUN",
    "ebbe": "VERB", "rende": "VERB", "rese": "VERB", "grandi": "ADJ",
    "eterni": "ADJ", "empi": "ADJ", "alti": "ADJ", "cupi": "ADJ",
    "foschi": "ADJ", "lunghi": "ADJ", "vasti": "ADJ", "muti": "ADJ",
    "sordi": "ADJ", "cara": "ADJ", "mia": "DET", "ancora": "ADV",
    "aspetta": "VERB", "guarda": "VERB", "pezzi": "NOUN", "vetri": "NOUN",
    "sassi": "NOUN", "canto": "NOUN", "vinta": "VERB", "lunga": "ADJ",
    "dura": "ADJ", "belli": "ADJ", "cari": "ADJ", "vari": "ADJ",
    "nuovi": "ADJ", "dire": "VERB", "anima": "NOUN", "leggere": "VERB",
    "!": "PUNCT",
}


def F(surface, score):
    return (surface, score, "f")


def P(surface, score):
    return (surface, score, "p")


def SP(surface, score):
    return (surface, score, "s")


# (sentence_id, mask_index) -> {"cands": [...], "variants": [...], "pad": bool}
PINNED: dict[tuple[str, int], dict] = {}


def pin(sid, idx, cands, variants=(), pad=True):
    PINNED[(sid, idx)] = {"cands": cands, "variants": list(variants), "pad": pad}


# --- poetry, non-canonical ---
pin("3.A", 0, [F("credo", 0.14), F("so", 0.12), F("dico", 0.09), F("vedo", 0.07),
               F("Pensa", 0.0611)], variants=["Pensa"])
pin("3.A", 4, [F("giardino", 0.291)])
pin("3.A", 5, [F("ove", 0.146)])
pin("3.A", 11, [P("erare", 0.4455), P("rare", 0.16737), P("lare", 0.0549),
                P("mare", 0.0479), P("scere", 0.03124), P("urora", 0.0221),
                P("vare", 0.0185), P("gnare", 0.0142), F("vivere", 0.0101),
                F("riposare", 0.0092)], pad=False)
pin("4.A", 1, [P("condo", 0.1401), P("mmai", 0.1211), F("fossi", 0.0912),
               F("avessi", 0.0741), F("fosse", 0.0632), F("con", 0.0519),
               F("solo", 0.0427)])
pin("4.A", 3, [F("mio", 0.291)])
pin("4.A", 4, [F("cuor", 0.394)])
pin("5.A", 2, [F("ritmo", 0.0931), F("passo", 0.0842), F("passare", 0.0711),
               F("procedere", 0.0650), F("battito", 0.0553), F("silenzio", 0.0441),
               F("riposo", 0.0366), F("senso", 0.0312), F("pensiero", 0.0250),
               F("suono", 0.0209)], pad=False)
pin("12.A", 5, [F("cuore", 0.1019)], variants=["cuore"])
pin("13.A", 1, [F("suoi", 0.081), F("non", 0.072), F("buoni", 0.061),
                F("mal", 0.05), F("loro", 0.04)])
pin("13.A", 9, [P("dotti", 0.0822), P("dotte", 0.0714), P("tente", 0.0653),
                P("sistenti", 0.0551), P("sistenza", 0.0432), P("difficoltà", 0.0341),
                P("fami", 0.0222), F("modo", 0.0151), F("tempo", 0.0131),
                F("senso", 0.0101)], pad=False)
pin("13.A", 14, [F(".", 0.09), F("buone", 0.071), F("inutili", 0.062),
                 F("nuove", 0.05), F("pubbliche", 0.04)])
pin("14.A", 1, [F("eco", 0.0984)])
pin("14.A", 11, [F("fino", 0.1139), F("intorno", 0.1139), F("dentro", 0.1001),
                 F("sino", 0.0476), F("vicino", 0.0437), F("di", 0.02),
                 F("a", 0.018), F("e", 0.015), F("la", 0.012), F("che", 0.01)],
    pad=False)

# --- poetry, canonical ---
pin("2.Ac", 0, [F("forse", 0.149)])
pin("2.Ac", 1, [F("bella", 0.023), F("dolce", 0.019), F("solo", 0.0145)],
    variants=["solo"])
pin("2.Ac", 2, [F("lei", 0.0355)])
pin("3.Ac", 0, [F("credo", 0.121), F("penso", 0.085)])
pin("3.Ac", 4, [F("giardino", 0.194)])
pin("3.Ac", 5, [F("ove", 0.146)])
pin("3.Ac", 8, [F("può", 0.0865)])
pin("4.Ac", 4, [F("mio", 0.291)])
pin("4.Ac", 5, [F("cuor", 0.394)])
pin("12.Ac", 4, [F("tolto", 0.156)])
pin("12.Ac", 6, [F("cuore", 0.0756)])
pin("14.Ac", 1, [F("eco", 0.0984)])
pin("14.Ac", 9, [F("pieni", 0.5461), F("piena", 0.0486), F("e", 0.0453),
                 F(",", 0.0271), F("pieno", 0.0216)])

# --- newswire, non-canonical ---
pin("1.B", 0, [SP("<s>", 0.99998)])
pin("1.B", 1, [F("Grazie", 0.14397)])
pin("1.B", 5, [F("più", 0.287)])
pin("1.B", 6, [F("occasioni", 0.0545)])
pin("1.B", 12, [F("miei", 0.88233)])
pin("6.B", 0, [F("diventa", 0.1108)])
pin("6.B", 3, [F("acuta", 0.0441)])
pin("6.B", 5, [P("mente", 0.16536), F("sensibilità", 0.0702),
               F("coscienza", 0.0601), F("gioia", 0.0434)])
pin("8.B", 5, [F("presa", 0.21), F("fatta", 0.18), F("presentata", 0.11),
               P("vamteen", 0.0403)])
pin("8.B", 7, [F("dopo", 0.0152)])
pin("9.B", 1, [F("vero", 0.04902)])
pin("9.B", 2, [F("ora", 0.3825)])
pin("9.B", 6, [SP("<s>", 0.0911)])
pin("10.B", 10, [F("maggiori", 0.2144)])
pin("10.B", 11, [F("certezze", 0.0852), F("garanzie", 0.0824),
                 F("informazioni", 0.04183), P("taria", 0.04003),
                 F("opportunità", 0.0383)])
pin("11.B", 2, [F("libro", 0.0242)])
pin("11.B", 11, [F("esempi", 0.65383)])
pin("15.B", 1, [F("governo", 0.304)])
pin("15.B", 9, [F("maggioranza", 0.0377)])
pin("15.B", 10, [F("assoluta", 0.349)])
pin("15.B", 12, [F("ha", 0.97755), F("aveva", 0.012), F("avrebbe", 0.008),
                 F("è", 0.005)])
pin("15.B", 13, [F("voluto", 0.491)])
pin("15.B", 15, [F("come", 0.9186)])
pin("15.B", 19, [F("puntare", 0.0385)])
pin("16.B", 1, [F("ministro", 0.497)])
pin("16.B", 12, [F("viene", 0.79483)])
pin("16.B", 15, [F("senatore", 0.80796)])
pin("16.B", 17, [F("vita", 0.99582)])
pin("17.B", 0, [F("il", 0.071)])
pin("17.B", 1, [F("passo", 0.112)])
pin("17.B", 3, [F("fare", 0.81857)])
pin("17.B", 4, [F("ha", 0.283)])
pin("17.B", 5, [F("detto", 0.55038)])
pin("17.B", 7, [F("questi", 0.96136)])
pin("17.B", 8, [F("giorni", 0.83000)])
pin("17.B", 11, [F("fare", 0.089)])
pin("17.B", 13, [F("Costituzione", 0.241), F("riforma", 0.194)])
pin("18.B", 3, [F("lavoro", 0.214)])
pin("18.B", 7, [F("metodo", 0.0618)])
pin("18.B", 15, [F("modo", 0.79384)])
pin("18.B", 19, [F("lavoro", 0.214)])

# --- newswire, canonical ---
pin("1.Bc", 1, [F("ringrazio", 0.0238)])
pin("1.Bc", 4, [F("dimostrata", 0.165)])
pin("1.Bc", 6, [F("più", 0.287)])
pin("1.Bc", 7, [F("occasioni", 0.0545)])
pin("1.Bc", 12, [F("miei", 0.88233)])
pin("6.Bc", 2, [F("diventa", 0.215)])
pin("6.Bc", 3, [F("così", 0.0439)])
pin("6.Bc", 4, [F("più", 0.55960)])
pin("7.Bc", 2, [F("ma", 0.095), F("e", 0.071), F("però", 0.05), F("più", 0.03),
                F("ed", 0.02)])
pin("7.Bc", 4, [F("diverso", 0.0812), F("risolto", 0.0741), F("compiuto", 0.0523),
                F("secondario", 0.0381), F("positivo", 0.0214)])
pin("8.Bc", 1, [F("ha", 0.3129), F("aveva", 0.0601), F("avrebbe", 0.0415),
                F("è", 0.0388)])
pin("8.Bc", 5, [F("importante", 0.0605)])
pin("9.Bc", 0, [F("oggi", 0.31), F("poi", 0.12), F("non", 0.09), F("ora", 0.0844)])
pin("9.Bc", 3, [F("farlo", 0.152), F("dirlo", 0.101), F("vederlo", 0.0741),
                F("prenderlo", 0.0502), F("leggerlo", 0.0311)])
pin("10.Bc", 4, [F("maggiori", 0.2144)])
pin("11.Bc", 1, [F("questo", 0.76715)])
pin("11.Bc", 3, [F("Maria", 0.283)])
pin("11.Bc", 4, [F("Teresa", 0.141)])
pin("11.Bc", 6, [F("esempi", 0.73481)])
pin("11.Bc", 9, [F("cristiana", 0.1919), F("'", 0.0909), F("'", 0.0387),
                 F("civile", 0.0383), F("esemplare", 0.0222), F("pastorale", 0.0201),
                 F("nuova", 0.0185), F("vera", 0.0170), F("di", 0.0151),
                 F("che", 0.0140)], pad=False)
pin("15.Bc", 1, [F("governo", 0.304)])
pin("15.Bc", 2, [F("ha", 0.97755), F("aveva", 0.012), F("avrebbe", 0.008),
                 F("è", 0.005)])
pin("15.Bc", 3, [F("voluto", 0.491)])
pin("15.Bc", 4, [F("puntare", 0.0385)])
pin("15.Bc", 14, [F("maggioranza", 0.0377)])
pin("15.Bc", 15, [F("assoluta", 0.349)])
pin("15.Bc", 17, [F("anche", 0.35), F("come", 0.1925)])
pin("16.Bc", 1, [F("ministro", 0.497)])
pin("16.Bc", 4, [F("viene", 0.79483)])
pin("16.Bc", 7, [F("senatore", 0.80796)])
pin("16.Bc", 9, [F("vita", 0.99582)])
pin("17.Bc", 1, [F("il", 0.071)])
pin("17.Bc", 2, [F("passo", 0.112)])
pin("17.Bc", 4, [F("fare", 0.81857)])
pin("17.Bc", 7, [F("fare", 0.089)])
pin("17.Bc", 9, [F("riforma", 0.194)])
pin("17.Bc", 10, [F("ha", 0.283)])
pin("17.Bc", 11, [F("detto", 0.55038)])
pin("17.Bc", 13, [F("questi", 0.96136)])
pin("17.Bc", 14, [F("giorni", 0.83000)])
pin("18.Bc", 4, [F("lavoro", 0.214)])
pin("18.Bc", 8, [F("metodo", 0.0618)])
pin("18.Bc", 13, [F("modo", 0.79384)])
pin("18.Bc", 17, [F("lavoro", 0.214)])

# Out-of-vocabulary records: fully explicit candidate lists.
OOV_RECORDS: list[tuple[str, int, str, list, bool]] = [
    ("3.A", 9, "può",
     [P("mo", 0.31), P("sti", 0.22), P("mmo", 0.17), P("i", 0.12),
      P("bbero", 0.09), P("bbe", 0.07), P("zzo", 0.05), P("tte", 0.04),
      F("potrà", 0.03), F("deve", 0.02)], True),
    ("3.A", 11, "conversare",
     [P("erare", 0.4455), P("rare", 0.16737), P("lare", 0.0549),
      P("mare", 0.0479), P("scere", 0.03124), P("urora", 0.0221),
      P("vare", 0.0185), P("gnare", 0.0142), F("vivere", 0.0101),
      F("riposare", 0.0092)], True),
    ("13.A", 9, "mezzo",
     [F("tempo", 0.10), F("costo", 0.09), F("prezzo", 0.08), F("modo", 0.07),
      F("senso", 0.06), F("corpo", 0.05), F("campo", 0.04), F("fondo", 0.03),
      F("punto", 0.02), F("lato", 0.01)], False),
    ("13.A", 12, "eseguire",
     [P("oro", 0.2101), P("amore", 0.1818), P("anime", 0.1514), P("ora", 0.1212),
      P("onde", 0.0911), P("oste", 0.0612), P("altre", 0.0419), P("isse", 0.0311),
      P("irti", 0.0205), P("acca", 0.0101)], True),
    ("4.A", 1, "primavera",
     [P("condo", 0.1401), P("mmai", 0.1211), F("fossi", 0.0912),
      F("avessi", 0.0741), F("fosse", 0.0632), F("con", 0.0519),
      F("solo", 0.0427), F("forse", 0.0315), F("sera", 0.0211),
      F("notte", 0.0105)], False),
    ("oov-opra.A", 1, "opra",
     [P("da", 0.21), P("dio", 0.19), P("re", 0.17), P("ta", 0.14),
      P("zione", 0.11), P("mente", 0.09), P("tore", 0.07), P("trice", 0.05),
      P("ggio", 0.03), P("ssa", 0.02)], True),
    ("oov-silenzi.A", 1, "silenzi",
     [P("tà", 0.22), P("smo", 0.18), P("oso", 0.15), P("osa", 0.12),
      P("etto", 0.10), P("ano", 0.08), P("ino", 0.06), P("one", 0.05),
      P("accio", 0.03), P("uccio", 0.02)], True),
    ("oov-canto.A", 1, "canto",
     [P("ddio", 0.21), P("nne", 0.18), F("suono", 0.12), F("rumore", 0.10),
      F("nome", 0.08), F("verso", 0.06), F("dono", 0.05), F("regalo", 0.04),
      F("fiore", 0.03), F("cielo", 0.02)], True),
    ("oov-cantò.A", 1, "cantò",
     [P("di", 0.25), P("gge", 0.21), P("dette", 0.17), P("ggiava", 0.13),
      P("ggia", 0.10), F("ebbe", 0.08), F("rende", 0.06), F("più", 0.05),
      F("di", 0.04), F("rese", 0.03)], True),
    ("oov-bove.A", 1, "bove",
     [P("ppo", 0.24), P("ve", 0.20), P("vra", 0.16), P("va", 0.13),
      P("ppi", 0.10), P("vere", 0.08), P("zzo", 0.05), P("ne", 0.04),
      P("ssa", 0.03), P("cco", 0.02)], True),
    ("oov-esili.A", 1, "esili",
     [P("è", 0.26), P("altri", 0.21), P("un", 0.17), P("hanno", 0.13),
      P("ggi", 0.09), P("tto", 0.06), P("ppo", 0.04), P("nni", 0.03),
      P("zze", 0.02), P("rra", 0.01)], True),
    ("oov-cantando.A", 1, "cantando",
     [P("etta", 0.22), P("data", 0.19), P("mano", 0.15), P("ia", 0.12),
      P("na", 0.10), P("ina", 0.08), P("cina", 0.06), P("tellina", 0.04),
      P("cia", 0.03), P("ggio", 0.02)], True),
    ("oov-come.A", 1, "come",
     [P("cchino", 0.23), P("ranno", 0.19), P("gnano", 0.16), P("cchi", 0.13),
      P("glia", 0.10), P("ccano", 0.07), P("gliano", 0.05), P("ffo", 0.04),
      P("zzi", 0.03), P("ppa", 0.02)], False),
    ("oov-pensieri.A", 1, "pensieri",
     [P("scono", 0.21), P("vano", 0.18), P("tano", 0.15), P("rono", 0.12),
      P("i", 0.10), P("ano", 0.08), P("ssimo", 0.06), P("gono", 0.04),
      F("e", 0.03), F("che", 0.02)], True),
    ("oov-sovrumani.A", 1, "sovrumani",
     [F("grandi", 0.19), F("eterni", 0.16), F("empi", 0.13), F("alti", 0.11),
      F("cupi", 0.09), F("foschi", 0.07), F("lunghi", 0.06), F("vasti", 0.05),
      F("muti", 0.03), F("sordi", 0.02)], False),
    ("oov-tenerella.A", 1, "tenerella",
     [P("himè", 0.21), P("ziosa", 0.18), P("blio", 0.15), P("de", 0.12),
      P("ppio", 0.10), P("rante", 0.08), F("cara", 0.06), F("dolce", 0.05),
      F("mia", 0.04), F("bella", 0.03)], True),
    ("oov-combattuta.A", 1, "combattuta",
     [P("si", 0.22), P("sità", 0.18), P("so", 0.15), P("sa", 0.12),
      P("ni", 0.09), P("tti", 0.07), P("llo", 0.05), F("vinta", 0.04),
      F("lunga", 0.03), F("dura", 0.02)], True),
    ("oov-lasciando.A", 1, "lasciando",
     [P("a", 0.24), P("ndo", 0.19), P("si", 0.15), P("mi", 0.12),
      P("vi", 0.10), P("ti", 0.08), P("ci", 0.06), P("gli", 0.04),
      F("poi", 0.03), F("ancora", 0.02)], True),
    ("oov-leggiadri.A", 1, "leggiadri",
     [P("ò", 0.23), P("erò", 0.19), P("i", 0.15), P("osi", 0.12),
      P("are", 0.09), P("uzzi", 0.07), F("belli", 0.05), F("cari", 0.04),
      F("vari", 0.03), F("nuovi", 0.02)], True),
    ("oov-attende.A", 1, "attende",
     [P("vata", 0.22), P("vata", 0.18), P("ssù", 0.15), P("sci", 0.12),
      P("vi", 0.10), P("scio", 0.08), P("vando", 0.06), P("scinado", 0.04),
      F("aspetta", 0.03), F("guarda", 0.02)], True),
    ("oov-aguzzi.A", 1, "aguzzi",
     [P("uti", 0.21), P("uto", 0.18), P("i", 0.15), P("one", 0.12),
      P("ata", 0.09), P("etti", 0.07), P("ume", 0.05), F("pezzi", 0.04),
      F("vetri", 0.03), F("sassi", 0.02)], True),
    ("oov-silenzio.A", 1, "silenzio",
     [P("issimi", 0.22), P("tone", 0.18), P("tato", 0.15), P("tare", 0.12),
      P("ure", 0.10), P("ura", 0.08), P("gente", 0.06), P("ero", 0.04),
      P("etto", 0.03), F("canto", 0.02)], True),
    ("oov-boundary.A", 0, "Ascolta",
     [SP("<s>", 0.97), SP("<s>NOTUSED", 0.81), F("!", 0.5), F("!", 0.22),
      F("dire", 0.1), SP("<s>NOTUSED", 0.09), F("che", 0.05), F("anima", 0.04),
      F("leggere", 0.03), F("tempo", 0.02)], False),
]

# ---------------------------------------------------------------------------
# Expected aggregates, asserted before anything is written.
# (n_words, n_masked, noncanon, canon, high, low, beyond)
# ---------------------------------------------------------------------------

EXPECTED_POETRY_ROWS = {
    "2.A": (10, 8, 0, 3, 4, 3, 1),
    "3.A": (14, 9, 3, 4, 6, 3, 0),
    "4.A": (10, 8, 2, 2, 4, 4, 0),
    "5.A": (9, 6, 0, 0, 4, 1, 2),
    "12.A": (11, 7, 1, 2, 4, 1, 0),
    "13.A": (15, 7, 0, 0, 5, 0, 2),
    "14.A": (14, 9, 1, 1, 6, 3, 1),
}
EXPECTED_POETRY_TOTALS = (83, 54, 7, 12, 33, 15, 6)
EXPECTED_NEWS_ROWS = {
    "1.B": (14, 8, 3, 5, 8, 0, 0),
    "6.B": (6, 5, 2, 3, 5, 0, 0),
    "7.B": (5, 4, 0, 0, 3, 1, 0),
    "8.B": (10, 7, 1, 2, 6, 1, 0),
    "9.B": (7, 4, 1, 1, 4, 1, 0),
    "10.B": (12, 9, 1, 1, 7, 2, 0),
    "11.B": (15, 10, 2, 4, 10, 0, 0),
    "15.B": (25, 10, 7, 7, 8, 2, 0),
    "16.B": (22, 10, 4, 4, 8, 2, 0),
    "17.B": (15, 9, 6, 6, 10, 0, 0),
    "18.B": (22, 10, 4, 4, 9, 0, 1),
}
EXPECTED_NEWS_TOTALS = (153, 86, 31, 37, 78, 9, 1)

# (pair, gold, noncanon, canon, phrase, type), sorted by (pair number, gold)
EXPECTED_TABLE6 = [
    ("1.B", "miei", 0.88233, 0.88233, "miei colleghi", "Function"),
    ("6.B", "più", None, 0.55960, "più acuta", "Function"),
    ("11.B", "esempi", 0.65383, 0.73481, "esempi di carità", "Content"),
    ("11.B", "questo", None, 0.76715, "questo libro", "Function"),
    ("15.B", "come", 0.9186, None, "come nell' IMI", "Function"),
    ("15.B", "ha", 0.97755, 0.97755, "ha voluto", "Function"),
    ("16.B", "senatore", 0.80796, 0.80796, "senatore a vita", "Content"),
    ("16.B", "viene", 0.79483, 0.79483, "viene nominato", "Function"),
    ("16.B", "vita", 0.99582, 0.99582, "senatore a vita", "Content"),
    ("17.B", "detto", 0.55038, 0.55038, "ha detto", "Content"),
    ("17.B", "fare", 0.81857, 0.81857, "intervento da fare", "Content"),
    ("17.B", "giorni", 0.83000, 0.83000, "questi giorni", "Content"),
    ("17.B", "questi", 0.96136, 0.96136, "questi giorni", "Function"),
    ("18.B", "modo", 0.79384, 0.79384, "modo giusto", "Content"),
]
EXPECTED_TABLE6_AT_09 = {("15.B", "ha"), ("15.B", "come"), ("16.B", "vita"),
                         ("17.B", "questi")}

EXPECTED_OOV_LABELS = {
    ("oov-opra.A", 1): CaseLabel.NONWORDS_ONLY,
    ("oov-silenzi.A", 1): CaseLabel.NONWORDS_ONLY,
    ("oov-canto.A", 1): CaseLabel.NONWORDS_PLUS_SUBSTITUTIONS,
    ("oov-cantò.A", 1): CaseLabel.NONWORDS_PLUS_SUBSTITUTIONS,
    ("oov-bove.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL,
    ("oov-esili.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL,
    ("oov-cantando.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL,
    ("oov-come.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL,
    ("13.A", 12): CaseLabel.NONWORDS_PLUS_LEGAL,
    ("oov-pensieri.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("3.A", 9): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("3.A", 11): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-tenerella.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-combattuta.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-lasciando.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-leggiadri.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-attende.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-aguzzi.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-silenzio.A", 1): CaseLabel.NONWORDS_PLUS_LEGAL_PLUS_SUBSTITUTIONS,
    ("oov-sovrumani.A", 1): CaseLabel.FULL_WORDS_ONLY_MISS,
    ("13.A", 9): CaseLabel.FULL_WORDS_ONLY_MISS,
    ("4.A", 1): CaseLabel.FULL_WORDS_ONLY_MISS,
    ("oov-boundary.A", 0): CaseLabel.BOUNDARY_DEGENERATE,
}

OOV_SINGLE_PIECE = {("13.A", 9), ("4.A", 1), ("oov-sovrumani.A", 1),
                    ("oov-boundary.A", 0), ("oov-come.A", 1)}

REFERENCE_TOTALS = {
    "poetry": {"noncanon_recognized": 7, "canon_recognized": 12,
               "structure_ratio": 0.583},
    "newswire": {"noncanon_recognized": 30, "canon_recognized": 36,
                 "structure_ratio": 0.834},
}


# ---------------------------------------------------------------------------
# Record assembly
# ---------------------------------------------------------------------------

def _fillers(existing: list[tuple[str, float, str]], exclude: set[str], need: int,
             seed_index: int) -> list[tuple[str, float, str]]:
    """Deterministic full-word filler candidates below the current tail score."""
    score = existing[-1][1] * 0.85 if existing else 0.08
    taken = {surface for surface, _, _ in existing}
    out: list[tuple[str, float, str]] = []
    position = seed_index % len(FILLER_POOL)
    while len(out) < need:
        surface, _pos = FILLER_POOL[position % len(FILLER_POOL)]
        position += 1
        if surface in exclude or surface in taken:
            continue
        taken.add(surface)
        out.append((surface, round(score, 6), "f"))
        score *= 0.85
    return out


def _candidate_payload(surface: str, score: float, kind: str) -> dict:
    payload = {"surface": surface, "score": score}
    if kind == "p":
        payload["is_subword_continuation"] = True
    if kind == "s":
        payload["is_special_token"] = True
    return payload


def build_pair_records(plans) -> list[str]:
    lines = [json.dumps({"format_version": "1", "model_id": MODEL_ID, "k": K,
                         "scoring": "cosine-affinity"}, ensure_ascii=False)]
    for sid in sorted(plans, key=lambda s: (int(s.split(".")[0]), s)):
        plan = plans[sid]
        tokens = S[sid][2]
        for idx in plan.indices:
            gold = tokens[idx]["surface"]
            spec = PINNED.get((sid, idx), {"cands": [], "variants": [], "pad": True})
            cands = list(spec["cands"])
            exclude = {gold, gold.lower()} | set(spec["variants"])
            if spec["pad"] and len(cands) < K:
                cands += _fillers(cands, exclude, K - len(cands), idx * 3 + len(sid))
            if len(cands) != K:
                raise AssertionError(f"{sid}@{idx}: {len(cands)} candidates")
            record = {
                "sentence_id": sid, "mask_index": idx, "gold_surface": gold,
                "candidates": [_candidate_payload(*c) for c in cands],
            }
            if spec["variants"]:
                record["gold_variants"] = spec["variants"]
            lines.append(json.dumps(record, ensure_ascii=False))
    return lines


def build_oov_records() -> list[str]:
    lines = [json.dumps({"format_version": "1", "model_id": MODEL_ID, "k": K,
                         "scoring": "cosine-affinity"}, ensure_ascii=False)]
    for sid, idx, gold, cands, multi in OOV_RECORDS:
        if len(cands) != K:
            raise AssertionError(f"oov {sid}@{idx}: {len(cands)} candidates")
        record = {
            "sentence_id": sid, "mask_index": idx, "gold_surface": gold,
            "candidates": [_candidate_payload(*c) for c in cands],
        }
        if multi:
            record["multi_piece"] = True
        lines.append(json.dumps(record, ensure_ascii=False))
    return lines


def build_pos_lookup(record_files: list[list[str]]) -> list[str]:
    pos: dict[str, str] = {}
    pool_pos = dict(FILLER_POOL)
    for lines in record_files:
        for line in lines[1:]:
            payload = json.loads(line)
            for cand in payload["candidates"]:
                if cand.get("is_subword_continuation") or cand.get("is_special_token"):
                    continue
                surface = unicodedata.normalize("NFC", cand["surface"])
                tag = PINNED_POS.get(surface) or pool_pos.get(surface)
                if tag is None:
                    raise AssertionError(f"no part-of-speech for candidate {surface!r}")
                if pos.setdefault(surface, tag) != tag:
                    raise AssertionError(f"conflicting tags for {surface!r}")
    return [f"{surface}\t{tag}" for surface, tag in sorted(pos.items())]


def corpus_payload() -> dict:
    sentences = []
    for sid in sorted(S, key=lambda s: (int(s.split(".")[0]), s)):
        domain, labels, tokens = S[sid]
        sentences.append({
            "id": sid,
            "domain": domain,
            "structure": "Canonical" if sid.endswith("c") else "NonCanonical",
            "ncs_labels": labels,
            "tokens": tokens,
        })
    return {"sentences": sentences, "pairs": PAIRS}


def oov_corpus_payload() -> dict:
    sentences = []
    for sid in ("3.A", "4.A", "13.A"):
        domain, labels, tokens = S[sid]
        sentences.append({
            "id": sid, "domain": domain, "structure": "NonCanonical",
            "ncs_labels": labels, "tokens": tokens,
        })
    for sid, tokens in OOV_STUBS:
        sentences.append({
            "id": sid, "domain": "Poetry", "structure": "NonCanonical",
            "ncs_labels": ["ObjectFronting"],
            "tokens": [_tok(*t) for t in tokens],
        })
    return {"sentences": sentences, "pairs": []}


def config_text() -> str:
    return f"""[paths]
lexicon = "fixtures/lexicon_snapshot.tsv"
corpus = "fixtures/corpus_18pairs.json"
records = "fixtures/records_pairs.jsonl"
pos_lookup = "fixtures/pos_lookup.tsv"
plans = "fixtures/plans.json"
reference_totals = "fixtures/reference_totals.json"

[analysis]
policy = "exact"
count_morph_variants = true
table6_threshold = 0.5
workers = 1

[lexicon]
banding_mode = "rank"
high_rank_cutoff = {THRESHOLDS.high_rank_cutoff}
core_vocab_size = {THRESHOLDS.core_vocab_size}
low_count_floor = {THRESHOLDS.low_count_floor}
verylow_count_floor = {THRESHOLDS.verylow_count_floor}
high_count_floor = {THRESHOLDS.high_count_floor}
"""


# ---------------------------------------------------------------------------
# Self-checks
# ---------------------------------------------------------------------------

def _approx(actual: float, expected: float, tol: float = 1e-9) -> bool:
    return math.isclose(actual, expected, rel_tol=0, abs_tol=tol)


def check_everything() -> None:
    lexicon = load_lexicon(FIX / "lexicon_snapshot.tsv", thresholds=THRESHOLDS)
    for surface, marker in MARKER_LIST:
        got = lexicon.marker_of(surface)
        if got != marker:
            raise AssertionError(f"marker for {surface!r}: expected {marker!r}, got {got!r}")
    count_mode = load_lexicon(FIX / "lexicon_snapshot.tsv", thresholds=THRESHOLDS,
                              mode=BandingMode.COUNT_BASED)
    for surface in lexicon.entries:
        if lexicon.band_of(surface) is not count_mode.band_of(surface):
            raise AssertionError(f"banding modes disagree on {surface!r}")
    for absent in ("impedito", "Ghitti", "maggioritaria", "Lascinado", "morbosa",
                   "studii", "insistenza", "infami", "coccii", "pianero"):
        if lexicon.is_legal_word(absent):
            raise AssertionError(f"{absent!r} must be absent from the lexicon")

    corpus = load_corpus(FIX / "corpus_18pairs.json")
    plans = load_plans(FIX / "plans.json", corpus)
    predictions = parse_records(FIX / "records_pairs.jsonl")
    pos_lookup = load_pos_lookup(FIX / "pos_lookup.tsv")
    validation = validate_against_plan(predictions, corpus, plans)
    if validation.has_findings:
        raise AssertionError(f"pair records do not match plans: {validation.summary()}")

    policy = MatchPolicy(base=MatchBase.EXACT_NFC, count_morph_variants=True)
    reference = load_reference_totals(FIX / "reference_totals.json")
    bundle = build_bundle(corpus, predictions, lexicon, plans, policy, pos_lookup,
                          table6_threshold=0.5, reference_totals=reference)

    by_domain = {c.domain: c for c in bundle.comparisons}
    for domain, expected_rows, expected_totals in (
        ("Poetry", EXPECTED_POETRY_ROWS, EXPECTED_POETRY_TOTALS),
        ("Newswire", EXPECTED_NEWS_ROWS, EXPECTED_NEWS_TOTALS),
    ):
        comparison = by_domain[domain]
        for row in comparison.rows:
            expected = expected_rows[row.label]
            actual = (row.n_words, row.n_masked, row.noncanon_recognized,
                      row.canon_recognized, row.high, row.low, row.beyond)
            if actual != expected:
                raise AssertionError(f"{domain} row {row.label}: {actual} != {expected}")
        s = comparison.summary
        totals = (s.total_words, s.total_masked, s.total_noncanon, s.total_canon,
                  s.total_high, s.total_low, s.total_beyond)
        if totals != expected_totals:
            raise AssertionError(f"{domain} totals: {totals} != {expected_totals}")

    poetry = by_domain["Poetry"].summary
    if not (_approx(poetry.masked_ratio, 54 / 83) and _approx(poetry.structure_ratio, 7 / 12)
            and _approx(poetry.lowfreq_ratio, 27 / 33)):
        raise AssertionError("poetry ratios drifted")
    news = by_domain["Newswire"].summary
    if not (_approx(news.masked_ratio, 86 / 153) and _approx(news.structure_ratio, 31 / 37)
            and _approx(news.lowfreq_ratio, 11 / 78)):
        raise AssertionError("newswire ratios drifted")
    if by_domain["Poetry"].reference is None or not by_domain["Poetry"].reference.consistent:
        raise AssertionError("poetry reference totals should be consistent")
    if by_domain["Newswire"].reference is None or by_domain["Newswire"].reference.consistent:
        raise AssertionError("newswire reference totals should flag a mismatch")
    if not any("Newswire" in flag for flag in bundle.flags):
        raise AssertionError("missing newswire reference mismatch flag")

    actual_table6 = [
        (r.pair_label, r.gold, r.noncanon_score, r.canon_score, r.phrase, r.lexical_type)
        for r in bundle.best_rows
    ]
    if len(actual_table6) != len(EXPECTED_TABLE6):
        raise AssertionError(
            f"best predictions: {len(actual_table6)} rows != {len(EXPECTED_TABLE6)}: "
            f"{[(r[0], r[1]) for r in actual_table6]}"
        )
    for actual, expected in zip(actual_table6, EXPECTED_TABLE6):
        for position, (a, b) in enumerate(zip(actual, expected)):
            same = _approx(a, b) if isinstance(a, float) and isinstance(b, float) else a == b
            if not same:
                raise AssertionError(f"best prediction {expected[:2]} field {position}: "
                                     f"{a!r} != {b!r}")
    at_09 = {(r.pair_label, r.gold) for r in bundle.best_rows if r.best > 0.9}
    if at_09 != EXPECTED_TABLE6_AT_09:
        raise AssertionError(f"threshold 0.9 set: {at_09}")

    predictability = dict(bundle.predictability)
    if not _approx(predictability["17.B"], 3.90931, 1e-6):
        raise AssertionError(f"17.B predictability {predictability['17.B']}")
    if not _approx(predictability["17.Bc"], 3.90931, 1e-6):
        raise AssertionError(f"17.Bc predictability {predictability['17.Bc']}")

    oov_corpus = load_corpus(FIX / "corpus_oov.json")
    oov_predictions = parse_records(FIX / "records_oov.jsonl")
    outcomes = evaluate_records(oov_predictions, oov_corpus, lexicon, policy, pos_lookup)
    labels = {(o.sentence_id, o.mask_index): o.case_label for o in outcomes}
    if labels != EXPECTED_OOV_LABELS:
        diffs = {k: (labels.get(k), v) for k, v in EXPECTED_OOV_LABELS.items()
                 if labels.get(k) is not v}
        raise AssertionError(f"case labels drifted: {diffs}")
    census = build_census(oov_predictions, oov_corpus, lexicon, policy, outcomes)
    by_key = {(e.sentence_id, e.mask_index): e for e in census}
    opra = by_key[("oov-opra.A", 1)]
    if opra.units[:2] != ["da", "dio"] or opra.reassembled[:2] != ["l'agilda", "l'agildio"]:
        raise AssertionError(f"opra census drifted: {opra.units} {opra.reassembled}")

    rendered = render_markdown(bundle)
    if rendered != render_markdown(bundle):
        raise AssertionError("markdown rendering is not deterministic")
    if render_json(bundle) != render_json(bundle):
        raise AssertionError("json rendering is not deterministic")
    if render_csv_tables(bundle) != render_csv_tables(bundle):
        raise AssertionError("csv rendering is not deterministic")

    n_recognized = sum(1 for c in bundle.comparisons for r in c.rows
                       for _ in range(r.noncanon_recognized + r.canon_recognized))
    if bundle.n_recognized != n_recognized:
        raise AssertionError("typology recognized total disagrees with rows")


def main() -> None:
    FIX.mkdir(exist_ok=True)

    rows = lexicon_rows()
    raw_lines = [f"{surface}\t{count}" for surface, count in sorted(rows)]
    for position, junk in zip((3, 17, 41, 73, 111), JUNK_ROWS):
        raw_lines.insert(position, f"{junk[0]}\t{junk[1]}")
    (FIX / "lexicon_raw.tsv").write_text("\n".join(raw_lines) + "\n",
                                         encoding="utf-8", newline="\n")

    lexicon = build_lexicon(raw_lines, thresholds=THRESHOLDS)
    if lexicon.dropped != len(JUNK_ROWS):
        raise AssertionError(f"expected {len(JUNK_ROWS)} dropped rows, got {lexicon.dropped}")
    save_lexicon(lexicon, FIX / "lexicon_snapshot.tsv")

    (FIX / "corpus_18pairs.json").write_text(
        json.dumps(corpus_payload(), ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8", newline="\n")
    (FIX / "corpus_oov.json").write_text(
        json.dumps(oov_corpus_payload(), ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8", newline="\n")
    (FIX / "plans.json").write_text(
        json.dumps({"policy": "content_plus_listed_function",
                    "function_indices": LISTED_FUNCTION},
                   ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8", newline="\n")

    corpus = load_corpus(FIX / "corpus_18pairs.json")
    plans = load_plans(FIX / "plans.json", corpus)
    for key in PINNED:
        sid, idx = key
        if idx not in plans[sid].indices:
            raise AssertionError(f"pinned record {key} is not a planned slot")

    pair_lines = build_pair_records(plans)
    if len(pair_lines) - 1 != sum(len(p.indices) for p in plans.values()):
        raise AssertionError("pair record count does not cover the plans")
    (FIX / "records_pairs.jsonl").write_text("\n".join(pair_lines) + "\n",
                                             encoding="utf-8", newline="\n")
    oov_lines = build_oov_records()
    (FIX / "records_oov.jsonl").write_text("\n".join(oov_lines) + "\n",
                                           encoding="utf-8", newline="\n")

    pos_lines = build_pos_lookup([pair_lines, oov_lines])
    (FIX / "pos_lookup.tsv").write_text("\n".join(pos_lines) + "\n",
                                        encoding="utf-8", newline="\n")

    (FIX / "reference_totals.json").write_text(
        json.dumps(REFERENCE_TOTALS, indent=1) + "\n", encoding="utf-8", newline="\n")
    (FIX / "config.toml").write_text(config_text(), encoding="utf-8", newline="\n")
    (FIX / "band_markers.tsv").write_text(
        "\n".join(f"{surface}\t{marker}" for surface, marker in MARKER_LIST) + "\n",
        encoding="utf-8", newline="\n")

    check_everything()
    print(f"fixtures written to {FIX}")
    print(f"lexicon entries: {len(lexicon)} (high cutoff {THRESHOLDS.high_rank_cutoff}, "
          f"core {THRESHOLDS.core_vocab_size})")
    print(f"pair records: {len(pair_lines) - 1}; oov records: {len(oov_lines) - 1}; "
          f"markers: {len(MARKER_LIST)}")


if __name__ == "__main__":
    main()
