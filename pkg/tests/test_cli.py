from __future__ import annotations

from pathlib import Path

import pytest
from click.testing import CliRunner

from lexstress.cli import cli
from lexstress.report import render_markdown, write_reports


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


def all_output(result) -> str:
    stderr = result.stderr if result.stderr_bytes is not None else ""
    return result.output + stderr


def write_config(tmp_path: Path, fixtures_dir: Path, **analysis_overrides) -> Path:
    analysis = {
        "policy": '"exact"',
        "count_morph_variants": "true",
        "table6_threshold": "0.5",
        "workers": "1",
    }
    for key, value in analysis_overrides.items():
        analysis[key] = value
    lines = [
        "[paths]",
        f'lexicon = "{fixtures_dir / "lexicon_snapshot.tsv"}"',
        f'corpus = "{fixtures_dir / "corpus_18pairs.json"}"',
        f'records = "{fixtures_dir / "records_pairs.jsonl"}"',
        f'pos_lookup = "{fixtures_dir / "pos_lookup.tsv"}"',
        f'plans = "{fixtures_dir / "plans.json"}"',
        f'reference_totals = "{fixtures_dir / "reference_totals.json"}"',
        "",
        "[analysis]",
    ]
    lines.extend(f"{key} = {value}" for key, value in analysis.items())
    lines.extend(
        [
            "",
            "[lexicon]",
            'banding_mode = "rank"',
            "high_rank_cutoff = 107",
            "core_vocab_size = 134",
            "low_count_floor = 1377",
            "verylow_count_floor = 4",
            "high_count_floor = 10000",
        ]
    )
    path = tmp_path / "config.toml"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_version_flag(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output


def test_lexicon_build_reproduces_snapshot(runner, fixtures_dir, tmp_path):
    out = tmp_path / "snapshot.tsv"
    result = runner.invoke(
        cli,
        [
            "lexicon", "build",
            "--in", str(fixtures_dir / "lexicon_raw.tsv"),
            "--out", str(out),
            "--high-rank-cutoff", "107",
            "--core-vocab-size", "134",
        ],
    )
    assert result.exit_code == 0, result.output
    assert "dropped 5 junk surfaces" in result.output
    assert out.read_bytes() == (fixtures_dir / "lexicon_snapshot.tsv").read_bytes()


def test_lexicon_build_reads_config(runner, fixtures_dir, tmp_path):
    config = write_config(tmp_path, fixtures_dir)
    out = tmp_path / "snapshot.tsv"
    result = runner.invoke(
        cli,
        [
            "lexicon", "build",
            "--config", str(config),
            "--in", str(fixtures_dir / "lexicon_raw.tsv"),
            "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    assert out.read_bytes() == (fixtures_dir / "lexicon_snapshot.tsv").read_bytes()


def test_lexicon_build_rejects_bad_input(runner, tmp_path):
    raw = tmp_path / "raw.tsv"
    raw.write_text("casa\tdieci\n", encoding="utf-8")
    result = runner.invoke(
        cli, ["lexicon", "build", "--in", str(raw), "--out", str(tmp_path / "o.tsv")]
    )
    assert result.exit_code == 2
    assert "error:" in all_output(result)


def test_evaluate_writes_reports(runner, fixtures_dir, tmp_path, bundle):
    config = write_config(tmp_path, fixtures_dir)
    out_dir = tmp_path / "out"
    result = runner.invoke(
        cli, ["evaluate", "--config", str(config), "--out", str(out_dir)]
    )
    assert result.exit_code == 0, result.output
    assert (out_dir / "report.md").read_bytes() == render_markdown(bundle)
    assert (out_dir / "report.json").exists()
    assert (out_dir / "report.comparison_poetry.csv").exists()


def test_evaluate_workers_flag_is_byte_stable(runner, fixtures_dir, tmp_path, bundle):
    config = write_config(tmp_path, fixtures_dir)
    out_dir = tmp_path / "parallel"
    result = runner.invoke(
        cli,
        ["evaluate", "--config", str(config), "--out", str(out_dir), "--workers", "4"],
    )
    assert result.exit_code == 0, result.output
    assert (out_dir / "report.md").read_bytes() == render_markdown(bundle)


def test_evaluate_flag_beats_config(runner, fixtures_dir, tmp_path):
    config = write_config(tmp_path, fixtures_dir)
    out_dir = tmp_path / "strict"
    result = runner.invoke(
        cli,
        [
            "evaluate", "--config", str(config), "--out", str(out_dir),
            "--table6-threshold", "0.9",
        ],
    )
    assert result.exit_code == 0, result.output
    text = (out_dir / "report.md").read_text(encoding="utf-8")
    assert "## Best predictions (score > 0.9)" in text
    csv_lines = (
        (out_dir / "report.best_predictions.csv").read_text(encoding="utf-8")
        .strip()
        .splitlines()
    )
    assert len(csv_lines) == 1 + 4


def test_evaluate_reads_config_from_envvar(runner, fixtures_dir, tmp_path, bundle):
    config = write_config(tmp_path, fixtures_dir)
    out_dir = tmp_path / "env"
    result = runner.invoke(
        cli,
        ["evaluate", "--out", str(out_dir)],
        env={"LEXSTRESS_CONFIG": str(config)},
    )
    assert result.exit_code == 0, result.output
    assert (out_dir / "report.md").read_bytes() == render_markdown(bundle)


def test_evaluate_requires_inputs(runner, tmp_path):
    result = runner.invoke(cli, ["evaluate", "--out", str(tmp_path / "o")])
    assert result.exit_code == 2
    assert "--lexicon is required" in all_output(result)


def test_evaluate_rejects_malformed_records(runner, fixtures_dir, tmp_path):
    config = write_config(tmp_path, fixtures_dir)
    bad = tmp_path / "records.jsonl"
    bad.write_text('{"format_version": "7"}\n', encoding="utf-8")
    result = runner.invoke(
        cli,
        [
            "evaluate", "--config", str(config), "--out", str(tmp_path / "o"),
            "--records", str(bad),
        ],
    )
    assert result.exit_code == 2
    assert "format_version" in all_output(result)


def test_evaluate_flags_missing_record_with_exit_3(runner, fixtures_dir, tmp_path):
    config = write_config(tmp_path, fixtures_dir)
    lines = (
        (fixtures_dir / "records_pairs.jsonl").read_text(encoding="utf-8").splitlines()
    )
    thinned = tmp_path / "records.jsonl"
    thinned.write_text("\n".join(lines[:-1]) + "\n", encoding="utf-8")
    out_dir = tmp_path / "out"
    result = runner.invoke(
        cli,
        [
            "evaluate", "--config", str(config), "--out", str(out_dir),
            "--records", str(thinned),
        ],
    )
    assert result.exit_code == 3
    assert "validation findings: missing=1" in all_output(result)
    assert (out_dir / "report.md").exists()


def test_compare_prints_tables_and_reference_mismatch(runner, fixtures_dir, tmp_path):
    config = write_config(tmp_path, fixtures_dir)
    result = runner.invoke(cli, ["compare", "--config", str(config)])
    assert result.exit_code == 0, result.output
    assert "== Poetry ==" in result.output
    assert "totals 83/54 7 12 33 15/6" in result.output
    assert "ratios masked=0.651 structure=0.583 lowfreq=0.818" in result.output
    assert "== Newswire ==" in result.output
    assert "totals 153/86 31 37 78 9/1" in result.output
    assert "ratios masked=0.562 structure=0.838 lowfreq=0.141" in result.output
    assert "reference totals MISMATCH" in result.output


def test_compare_writes_comparison_csvs(runner, fixtures_dir, tmp_path):
    config = write_config(tmp_path, fixtures_dir)
    out_dir = tmp_path / "csv"
    result = runner.invoke(
        cli, ["compare", "--config", str(config), "--out", str(out_dir)]
    )
    assert result.exit_code == 0, result.output
    assert (out_dir / "report.comparison_poetry.csv").exists()
    assert (out_dir / "report.comparison_newswire.csv").exists()


def test_oov_prints_census(runner, fixtures_dir, tmp_path):
    result = runner.invoke(
        cli,
        [
            "oov",
            "--lexicon", str(fixtures_dir / "lexicon_snapshot.tsv"),
            "--corpus", str(fixtures_dir / "corpus_oov.json"),
            "--records", str(fixtures_dir / "records_oov.jsonl"),
            "--pos-lookup", str(fixtures_dir / "pos_lookup.tsv"),
        ],
    )
    assert result.exit_code == 0, result.output
    assert "SUBWORD UNITS =" in result.output
    assert "[NonwordsOnly]" in result.output
    assert "[BoundaryDegenerate]" in result.output
    assert "opra (oov-opra.A@1)" in result.output


def test_oov_writes_census_file(runner, fixtures_dir, tmp_path):
    out = tmp_path / "census.txt"
    result = runner.invoke(
        cli,
        [
            "oov",
            "--lexicon", str(fixtures_dir / "lexicon_snapshot.tsv"),
            "--corpus", str(fixtures_dir / "corpus_oov.json"),
            "--records", str(fixtures_dir / "records_oov.jsonl"),
            "--pos-lookup", str(fixtures_dir / "pos_lookup.tsv"),
            "--out", str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    assert "SUBWORD UNITS =" in out.read_text(encoding="utf-8")


def test_report_rerenders_saved_bundle(runner, bundle, tmp_path):
    write_reports(bundle, tmp_path / "first")
    out_dir = tmp_path / "second"
    result = runner.invoke(
        cli,
        [
            "report",
            "--bundle", str(tmp_path / "first" / "report.json"),
            "--format", "md",
            "--out", str(out_dir),
        ],
    )
    assert result.exit_code == 0, result.output
    first = (tmp_path / "first" / "report.md").read_bytes()
    assert (out_dir / "report.md").read_bytes() == first


def test_report_csv_format(runner, bundle, tmp_path):
    write_reports(bundle, tmp_path / "first")
    out_dir = tmp_path / "csv"
    result = runner.invoke(
        cli,
        [
            "report",
            "--bundle", str(tmp_path / "first" / "report.json"),
            "--format", "csv",
            "--out", str(out_dir),
        ],
    )
    assert result.exit_code == 0, result.output
    assert (out_dir / "report.best_predictions.csv").exists()


def test_report_rejects_missing_bundle(runner, tmp_path):
    result = runner.invoke(
        cli,
        ["report", "--bundle", str(tmp_path / "nope.json"), "--out", str(tmp_path)],
    )
    assert result.exit_code == 2
