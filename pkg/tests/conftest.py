from __future__ import annotations

from pathlib import Path

import pytest

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from lexstress.analysis import MatchBase, MatchPolicy, load_pos_lookup
from lexstress.corpus import Corpus, load_corpus, load_plans
from lexstress.lexicon import BandThresholds, Lexicon, load_lexicon
from lexstress.predictions import PredictionSet, parse_records
from lexstress.report import ReportBundle, build_bundle, load_reference_totals

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def config() -> dict:
    with open(FIXTURES / "config.toml", "rb") as handle:
        return tomllib.load(handle)


@pytest.fixture(scope="session")
def thresholds(config: dict) -> BandThresholds:
    section = config["lexicon"]
    return BandThresholds(
        high_rank_cutoff=section["high_rank_cutoff"],
        core_vocab_size=section["core_vocab_size"],
        low_count_floor=section["low_count_floor"],
        verylow_count_floor=section["verylow_count_floor"],
        high_count_floor=section["high_count_floor"],
    )


@pytest.fixture(scope="session")
def lexicon(thresholds: BandThresholds) -> Lexicon:
    return load_lexicon(FIXTURES / "lexicon_snapshot.tsv", thresholds=thresholds)


@pytest.fixture(scope="session")
def corpus() -> Corpus:
    return load_corpus(FIXTURES / "corpus_18pairs.json")


@pytest.fixture(scope="session")
def plans(corpus: Corpus):
    return load_plans(FIXTURES / "plans.json", corpus)


@pytest.fixture(scope="session")
def predictions() -> PredictionSet:
    return parse_records(FIXTURES / "records_pairs.jsonl")


@pytest.fixture(scope="session")
def pos_lookup() -> dict[str, str]:
    return load_pos_lookup(FIXTURES / "pos_lookup.tsv")


@pytest.fixture(scope="session")
def policy() -> MatchPolicy:
    return MatchPolicy(base=MatchBase.EXACT_NFC, count_morph_variants=True)


@pytest.fixture(scope="session")
def oov_corpus() -> Corpus:
    return load_corpus(FIXTURES / "corpus_oov.json")


@pytest.fixture(scope="session")
def oov_predictions() -> PredictionSet:
    return parse_records(FIXTURES / "records_oov.jsonl")


@pytest.fixture(scope="session")
def bundle(corpus, predictions, lexicon, plans, policy, pos_lookup) -> ReportBundle:
    reference = load_reference_totals(FIXTURES / "reference_totals.json")
    return build_bundle(
        corpus,
        predictions,
        lexicon,
        plans,
        policy,
        pos_lookup,
        table6_threshold=0.5,
        reference_totals=reference,
    )
