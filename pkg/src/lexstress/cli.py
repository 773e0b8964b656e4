"""Command-line interface.

Subcommands cover the pipeline end to end: ``lexicon build`` turns a raw
frequency TSV into a ranked snapshot, ``evaluate`` runs the full analysis
and writes every report artifact, ``compare`` prints the per-pair
comparison tables, ``oov`` prints the out-of-vocabulary census and
``report`` re-renders saved bundle JSON without re-running the analysis.

Settings come from flags, then a TOML config file (``--config`` or the
``LEXSTRESS_CONFIG`` environment variable), then built-in defaults; flags
always win.  Exit codes: 0 on success, 2 on input or format errors, 3 when
plan validation finds missing, spurious or mismatched records.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from lexstress.analysis import (
    AnalysisError,
    MatchBase,
    MatchPolicy,
    evaluate_records,
    load_pos_lookup,
)
from lexstress.corpus import CorpusFormatError, load_corpus, load_plans
from lexstress.lexicon import (
    BandingMode,
    BandThresholds,
    LexiconFormatError,
    build_lexicon,
    load_lexicon,
    save_lexicon,
)
from lexstress.metrics import MetricsError
from lexstress.predictions import RecordFormatError, parse_records
from lexstress.report import (
    ReportError,
    build_bundle,
    build_census,
    load_bundle,
    load_reference_totals,
    render_csv_tables,
    render_markdown,
    render_json,
    write_reports,
)

_INPUT_ERRORS = (
    LexiconFormatError,
    CorpusFormatError,
    RecordFormatError,
    AnalysisError,
    MetricsError,
    ReportError,
    OSError,
    json.JSONDecodeError,
    KeyError,
    ValueError,
)

EXIT_INPUT_ERROR = 2
EXIT_VALIDATION_FINDINGS = 3


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "rb") as handle:
        return tomllib.load(handle)


def _setting(flag, config: dict, section: str, key: str, default):
    """Resolve one setting: flag beats config file beats default."""
    if flag is not None:
        return flag
    value = config.get(section, {}).get(key)
    if value is not None:
        return value
    return default


def _policy_from(name: str, variants: bool) -> MatchPolicy:
    bases = {"exact": MatchBase.EXACT_NFC, "casefold": MatchBase.CASEFOLDED_NFC}
    if name not in bases:
        raise ReportError(f"unknown match policy {name!r}; expected exact or casefold")
    return MatchPolicy(base=bases[name], count_morph_variants=variants)


def _banding_from(name: str) -> BandingMode:
    modes = {"rank": BandingMode.RANK_BASED, "count": BandingMode.COUNT_BASED}
    if name not in modes:
        raise ReportError(f"unknown banding mode {name!r}; expected rank or count")
    return modes[name]


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT_ERROR)


@click.group()
@click.version_option(package_name="lexstress")
def cli() -> None:
    """Masked-word prediction stress analysis."""


@cli.group()
def lexicon() -> None:
    """Frequency lexicon utilities."""


@lexicon.command("build")
@click.option("--config", envvar="LEXSTRESS_CONFIG", type=click.Path(exists=True), default=None)
@click.option("--in", "raw_path", type=click.Path(exists=True), required=True,
              help="Raw surface<TAB>count TSV.")
@click.option("--out", "out_path", type=click.Path(), required=True,
              help="Destination for the ranked snapshot.")
@click.option("--banding-mode", type=str, default=None)
@click.option("--high-rank-cutoff", type=int, default=None)
@click.option("--core-vocab-size", type=int, default=None)
@click.option("--low-count-floor", type=int, default=None)
@click.option("--verylow-count-floor", type=int, default=None)
@click.option("--high-count-floor", type=int, default=None)
def lexicon_build(config, raw_path, out_path, banding_mode, high_rank_cutoff,
                  core_vocab_size, low_count_floor, verylow_count_floor,
                  high_count_floor) -> None:
    """Build a ranked lexicon snapshot from raw frequency counts."""
    try:
        conf = _load_config(config)
        thresholds = BandThresholds(
            high_rank_cutoff=_setting(high_rank_cutoff, conf, "lexicon", "high_rank_cutoff", 10000),
            core_vocab_size=_setting(core_vocab_size, conf, "lexicon", "core_vocab_size", 50000),
            low_count_floor=_setting(low_count_floor, conf, "lexicon", "low_count_floor", 1377),
            verylow_count_floor=_setting(verylow_count_floor, conf, "lexicon", "verylow_count_floor", 4),
            high_count_floor=_setting(high_count_floor, conf, "lexicon", "high_count_floor", 10000),
        )
        mode = _banding_from(_setting(banding_mode, conf, "lexicon", "banding_mode", "rank"))
        with open(raw_path, encoding="utf-8") as handle:
            built = build_lexicon(handle, thresholds=thresholds, mode=mode)
        save_lexicon(built, out_path)
    except _INPUT_ERRORS as exc:
        _fail(str(exc))
    click.echo(
        f"built lexicon: {len(built)} entries "
        f"(dropped {built.dropped} junk surfaces) -> {out_path}"
    )


def _load_inputs(conf: dict, lexicon_path, corpus_path, records_path,
                 pos_lookup_path, plans_path, banding_mode, policy, variants):
    lexicon_path = _setting(lexicon_path, conf, "paths", "lexicon", None)
    corpus_path = _setting(corpus_path, conf, "paths", "corpus", None)
    records_path = _setting(records_path, conf, "paths", "records", None)
    pos_lookup_path = _setting(pos_lookup_path, conf, "paths", "pos_lookup", None)
    plans_path = _setting(plans_path, conf, "paths", "plans", None)
    for name, value in (
        ("--lexicon", lexicon_path),
        ("--corpus", corpus_path),
        ("--records", records_path),
        ("--pos-lookup", pos_lookup_path),
    ):
        if value is None:
            raise ReportError(f"{name} is required (flag or config)")
    thresholds = BandThresholds(
        high_rank_cutoff=conf.get("lexicon", {}).get("high_rank_cutoff", 10000),
        core_vocab_size=conf.get("lexicon", {}).get("core_vocab_size", 50000),
        low_count_floor=conf.get("lexicon", {}).get("low_count_floor", 1377),
        verylow_count_floor=conf.get("lexicon", {}).get("verylow_count_floor", 4),
        high_count_floor=conf.get("lexicon", {}).get("high_count_floor", 10000),
    )
    mode = _banding_from(_setting(banding_mode, conf, "lexicon", "banding_mode", "rank"))
    lex = load_lexicon(lexicon_path, thresholds=thresholds, mode=mode)
    corpus = load_corpus(corpus_path)
    predictions = parse_records(Path(records_path))
    pos_lookup = load_pos_lookup(pos_lookup_path)
    plans = load_plans(plans_path, corpus) if plans_path else None
    match_policy = _policy_from(
        _setting(policy, conf, "analysis", "policy", "exact"),
        _setting(variants, conf, "analysis", "count_morph_variants", False),
    )
    return lex, corpus, predictions, pos_lookup, plans, match_policy


_shared_options = [
    click.option("--config", envvar="LEXSTRESS_CONFIG", type=click.Path(exists=True), default=None),
    click.option("--lexicon", "lexicon_path", type=click.Path(exists=True), default=None),
    click.option("--corpus", "corpus_path", type=click.Path(exists=True), default=None),
    click.option("--records", "records_path", type=click.Path(exists=True), default=None),
    click.option("--pos-lookup", "pos_lookup_path", type=click.Path(exists=True), default=None),
    click.option("--policy", type=str, default=None, help="Gold match base: exact or casefold."),
    click.option("--variants/--no-variants", "variants", default=None,
                 help="Count listed morphological variants as recognitions."),
    click.option("--banding-mode", type=str, default=None),
    click.option("--k-limit", type=int, default=None),
    click.option("--workers", type=int, default=None),
]


def _with_shared_options(command):
    for option in reversed(_shared_options):
        command = option(command)
    return command


@cli.command()
@_with_shared_options
@click.option("--plans", "plans_path", type=click.Path(exists=True), default=None)
@click.option("--out", "out_dir", type=click.Path(), default=None)
@click.option("--table6-threshold", type=float, default=None)
@click.option("--reference-totals", "reference_path", type=click.Path(exists=True), default=None)
def evaluate(config, lexicon_path, corpus_path, records_path, pos_lookup_path,
             policy, variants, banding_mode, k_limit, workers, plans_path,
             out_dir, table6_threshold, reference_path) -> None:
    """Run the full analysis and write every report artifact."""
    try:
        conf = _load_config(config)
        lex, corpus, predictions, pos_lookup, plans, match_policy = _load_inputs(
            conf, lexicon_path, corpus_path, records_path, pos_lookup_path,
            plans_path, banding_mode, policy, variants,
        )
        if plans is None:
            raise ReportError("--plans is required (flag or config)")
        out_dir = _setting(out_dir, conf, "paths", "out", None)
        if out_dir is None:
            raise ReportError("--out is required (flag or config)")
        reference_path = _setting(reference_path, conf, "paths", "reference_totals", None)
        reference = load_reference_totals(reference_path) if reference_path else None
        bundle = build_bundle(
            corpus,
            predictions,
            lex,
            plans,
            match_policy,
            pos_lookup,
            table6_threshold=_setting(table6_threshold, conf, "analysis", "table6_threshold", 0.5),
            k_limit=_setting(k_limit, conf, "analysis", "k_limit", None),
            workers=_setting(workers, conf, "analysis", "workers", 1),
            reference_totals=reference,
        )
        written = write_reports(bundle, out_dir)
    except _INPUT_ERRORS as exc:
        _fail(str(exc))
    for path in written:
        click.echo(str(path))
    if bundle.has_validation_findings:
        click.echo(
            f"validation findings: missing={len(bundle.validation_missing)} "
            f"spurious={len(bundle.validation_spurious)} "
            f"gold_mismatches={len(bundle.validation_gold_mismatches)}",
            err=True,
        )
        sys.exit(EXIT_VALIDATION_FINDINGS)


@cli.command()
@_with_shared_options
@click.option("--plans", "plans_path", type=click.Path(exists=True), default=None)
@click.option("--out", "out_dir", type=click.Path(), default=None)
@click.option("--reference-totals", "reference_path", type=click.Path(exists=True), default=None)
def compare(config, lexicon_path, corpus_path, records_path, pos_lookup_path,
            policy, variants, banding_mode, k_limit, workers, plans_path,
            out_dir, reference_path) -> None:
    """Print the per-pair comparison tables; optionally write the CSVs."""
    try:
        conf = _load_config(config)
        lex, corpus, predictions, pos_lookup, plans, match_policy = _load_inputs(
            conf, lexicon_path, corpus_path, records_path, pos_lookup_path,
            plans_path, banding_mode, policy, variants,
        )
        if plans is None:
            raise ReportError("--plans is required (flag or config)")
        reference_path = _setting(reference_path, conf, "paths", "reference_totals", None)
        reference = load_reference_totals(reference_path) if reference_path else None
        bundle = build_bundle(
            corpus, predictions, lex, plans, match_policy, pos_lookup,
            k_limit=_setting(k_limit, conf, "analysis", "k_limit", None),
            workers=_setting(workers, conf, "analysis", "workers", 1),
            reference_totals=reference,
        )
    except _INPUT_ERRORS as exc:
        _fail(str(exc))
    for comparison in bundle.comparisons:
        click.echo(f"== {comparison.domain} ==")
        for row in comparison.rows:
            click.echo(
                f"{row.label} {row.words_cell()} {row.noncanon_recognized} "
                f"{row.canon_recognized} {row.high} {row.low_cell()}"
            )
        s = comparison.summary
        beyond = f"{s.total_low}/{s.total_beyond}" if s.total_beyond else str(s.total_low)
        click.echo(
            f"totals {s.total_words}/{s.total_masked} {s.total_noncanon} "
            f"{s.total_canon} {s.total_high} {beyond}"
        )
        click.echo(
            f"ratios masked={s.masked_ratio:.3f} structure={s.structure_ratio:.3f} "
            f"lowfreq={s.lowfreq_ratio:.3f}"
        )
        if comparison.reference is not None and not comparison.reference.consistent:
            click.echo("reference totals MISMATCH (see report flags)")
    if out_dir:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        tables = render_csv_tables(bundle)
        for name in sorted(tables):
            if name.startswith("comparison_"):
                (out / f"report.{name}.csv").write_bytes(tables[name])
    if bundle.has_validation_findings:
        sys.exit(EXIT_VALIDATION_FINDINGS)


@cli.command()
@_with_shared_options
@click.option("--out", "out_path", type=click.Path(), default=None)
def oov(config, lexicon_path, corpus_path, records_path, pos_lookup_path,
        policy, variants, banding_mode, k_limit, workers, out_path) -> None:
    """Print the out-of-vocabulary census for every unrecognized record."""
    try:
        conf = _load_config(config)
        lex, corpus, predictions, pos_lookup, _plans, match_policy = _load_inputs(
            conf, lexicon_path, corpus_path, records_path, pos_lookup_path,
            None, banding_mode, policy, variants,
        )
        outcomes = evaluate_records(predictions, corpus, lex, match_policy, pos_lookup)
        census = build_census(predictions, corpus, lex, match_policy, outcomes)
    except _INPUT_ERRORS as exc:
        _fail(str(exc))
    lines: list[str] = []
    for entry in census:
        lines.append(
            f"{entry.gold} ({entry.sentence_id}@{entry.mask_index}) [{entry.label}]"
        )
        parts = [f"SUBWORD UNITS = {', '.join(entry.units) if entry.units else '(none)'}"]
        if entry.reassembled:
            parts.append(f"// {', '.join(entry.reassembled)}")
        if entry.legal:
            parts.append(f"BUT--- {', '.join(entry.legal)}")
        if entry.full_words:
            parts.append(f"FULL--- {', '.join(entry.full_words)}")
        if entry.specials:
            parts.append(f"SPECIAL--- {', '.join(entry.specials)}")
        lines.append("  " + " ".join(parts))
    text = "\n".join(lines)
    click.echo(text if text else "no unrecognized records")
    if out_path:
        Path(out_path).write_bytes((text + "\n").encode("utf-8") if text else b"")


@cli.command("report")
@click.option("--bundle", "bundle_path", type=click.Path(exists=True), required=True,
              help="Saved report.json from a previous evaluate run.")
@click.option("--format", "fmt", type=click.Choice(["md", "csv", "json"]), default="md")
@click.option("--out", "out_dir", type=click.Path(), required=True)
def report_command(bundle_path, fmt, out_dir) -> None:
    """Re-render a saved bundle without re-running the analysis."""
    try:
        bundle = load_bundle(bundle_path)
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        written: list[Path] = []
        if fmt == "md":
            path = out / "report.md"
            path.write_bytes(render_markdown(bundle))
            written.append(path)
        elif fmt == "json":
            path = out / "report.json"
            path.write_bytes(render_json(bundle))
            written.append(path)
        else:
            for name, data in render_csv_tables(bundle).items():
                path = out / f"report.{name}.csv"
                path.write_bytes(data)
                written.append(path)
    except _INPUT_ERRORS as exc:
        _fail(str(exc))
    for path in written:
        click.echo(str(path))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
