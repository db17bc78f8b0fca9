"""Command-line interface: parse single documents, evaluate corpora, serve.

Exit codes: 0 success, 1 pipeline/data error, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import __version__
from .errors import MarkparseError, MissingGold
from .lexicon import default_lexicon, load_lexicon
from .pipeline import PRESETS, PipelineConfig, evaluate_corpus, load_gold, parse_document

INPUT_PATTERNS = ("*.ocr.json", "*.png", "*.pgm")


def _build_config(pre: bool, post: bool, lexicon: str | None, engine: str | None) -> PipelineConfig:
    return PipelineConfig(
        preprocess=pre,
        postprocess=post,
        engine=engine,
        lexicon=load_lexicon(lexicon) if lexicon else default_lexicon(),
    )


@click.group()
@click.version_option(version=__version__, prog_name="markparse")
def main():
    """Extract verified subject marks from scanned marksheet OCR output."""


@main.command("parse")
@click.argument("input_path", type=click.Path(path_type=Path))
@click.option("--pre/--no-pre", "pre", default=True, help="Image preprocessing (image mode only).")
@click.option("--post/--no-post", "post", default=True, help="Fuzzy lexicon post-processing.")
@click.option("--lexicon", type=click.Path(path_type=Path), default=None, help="Alternative lexicon JSON.")
@click.option("--engine", default=None, help="External OCR engine command for image inputs.")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Write result JSON here instead of stdout.")
def cmd_parse(input_path: Path, pre: bool, post: bool, lexicon: Path | None, engine: str | None, out: Path | None):
    """Parse one image or token dump into a marksheet result."""
    try:
        config = _build_config(pre, post, str(lexicon) if lexicon else None, engine)
        result = parse_document(input_path, config)
    except MarkparseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    payload = json.dumps(result.to_json(), indent=2, sort_keys=True) + "\n"
    if out:
        out.write_text(payload, encoding="utf-8")
    else:
        click.echo(payload, nl=False)


@main.command("eval")
@click.argument("corpus_dir", type=click.Path(path_type=Path))
@click.argument("gold_file", type=click.Path(path_type=Path))
@click.option("--v3", "preset", flag_value="v3", help="Baseline: no preprocessing, exact matching.")
@click.option("--v3a", "preset", flag_value="v3a", help="Adds image preprocessing.")
@click.option("--v4", "preset", flag_value="v4", default=True, help="Adds lexicon post-processing (default).")
@click.option("--lexicon", type=click.Path(path_type=Path), default=None, help="Alternative lexicon JSON.")
@click.option("--engine", default=None, help="External OCR engine command for image inputs.")
@click.option("--jobs", type=int, default=1, help="Parallel workers across documents.")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Report JSON path (default: eval-report-<preset>.json in the corpus dir).")
def cmd_eval(corpus_dir: Path, gold_file: Path, preset: str, lexicon: Path | None,
             engine: str | None, jobs: int, out: Path | None):
    """Parse every document in a corpus directory and score against gold."""
    if preset not in PRESETS:
        raise click.UsageError(f"unknown preset {preset}")
    if not corpus_dir.is_dir():
        click.echo(f"error: corpus directory not found: {corpus_dir}", err=True)
        sys.exit(1)
    inputs = sorted(p for pattern in INPUT_PATTERNS for p in corpus_dir.glob(pattern))
    if not inputs:
        click.echo(f"error: no parseable documents under {corpus_dir}", err=True)
        sys.exit(1)
    try:
        gold = load_gold(gold_file)
        config = _build_config(True, True, str(lexicon) if lexicon else None, engine).with_preset(preset)
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(lambda p: parse_document(p, config), inputs))
        else:
            results = [parse_document(p, config) for p in inputs]
        results.sort(key=lambda r: r.source_id)
        report = evaluate_corpus(results, gold)
    except MissingGold as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except (MarkparseError, OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)

    click.echo(report.format_table())
    report_path = out or corpus_dir / f"eval-report-{preset}.json"
    report_json = {"preset": preset, **report.to_json()}
    report_path.write_text(json.dumps(report_json, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    click.echo(f"report written to {report_path}")


@main.command("serve")
@click.option("--bind", default=None, help="host:port to listen on (also BIND_ADDR; default 127.0.0.1:8000).")
@click.option("--data-dir", type=click.Path(path_type=Path), default=None, help="Result storage directory.")
@click.option("--lexicon", type=click.Path(path_type=Path), default=None, help="Alternative lexicon JSON.")
@click.option("--engine", default=None, help="External OCR engine command for image uploads.")
def cmd_serve(bind: str | None, data_dir: Path | None, lexicon: Path | None, engine: str | None):
    """Run the HTTP review service."""
    import os

    import uvicorn

    from .service import create_app

    bind = bind or os.environ.get("BIND_ADDR", "127.0.0.1:8000")
    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise click.UsageError(f"--bind must be host:port, got {bind!r}")
    try:
        app = create_app(
            data_dir=data_dir,
            lexicon_path=str(lexicon) if lexicon else None,
            engine_cmd=engine,
        )
    except MarkparseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    uvicorn.run(app, host=host, port=int(port_text))


if __name__ == "__main__":
    main()
