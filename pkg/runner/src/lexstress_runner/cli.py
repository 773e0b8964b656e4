from __future__ import annotations

import sys
from pathlib import Path

import click

from lexstress_runner.backends import StubBackend, TransformersBackend
from lexstress_runner.config import RunnerConfig
from lexstress_runner.writer import write_wire_records


@click.command()
@click.option("--model", required=True, help="Model identifier to query.")
@click.option(
    "--corpus",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Corpus JSON file.",
)
@click.option(
    "--plan",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Mask plan JSON file.",
)
@click.option(
    "--out",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help="Output JSONL path.",
)
@click.option("--k", default=10, show_default=True, help="Candidates kept per mask.")
@click.option(
    "--backend",
    "backend_name",
    type=click.Choice(["stub", "transformers"]),
    default="transformers",
    show_default=True,
    help="Prediction backend.",
)
@click.option("--device", default=None, help="Device hint, e.g. cpu or cuda:0.")
def main(
    model: str,
    corpus: Path,
    plan: Path,
    out: Path,
    k: int,
    backend_name: str,
    device: str | None,
) -> None:
    """Fill every planned mask with a model's top candidates."""
    if k < 1:
        raise click.BadParameter("--k must be at least 1")
    config = RunnerConfig(
        model_id=model,
        corpus_path=corpus,
        plan_path=plan,
        output_path=out,
        k=k,
        device=device,
    )
    if backend_name == "stub":
        backend = StubBackend()
    else:
        backend = TransformersBackend(model_id=model, device=device)
    try:
        path = write_wire_records(config, backend)
    except Exception as error:
        click.echo(f"runner failed: {error}", err=True)
        sys.exit(1)
    click.echo(f"wrote {path}")


if __name__ == "__main__":
    main()
