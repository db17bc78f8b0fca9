"""Shared fixtures: bundled dumps, the ruled test image, token helpers."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import numpy as np
import pytest

from markparse.corpus import build_synthetic_corpus
from markparse.ocr import OcrToken, TokenStream
from markparse.preprocess import BinaryImage


@pytest.fixture(scope="session")
def gujarat_dump_path() -> Path:
    with resources.as_file(
        resources.files("markparse").joinpath("data/gujarat_sample.ocr.json")
    ) as path:
        return Path(path)


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory) -> Path:
    """The bundled synthetic corpus written to a scratch directory."""
    directory = tmp_path_factory.mktemp("corpus")
    gold = {}
    for doc in build_synthetic_corpus():
        (directory / f"{doc.source_id}.ocr.json").write_text(json.dumps(doc.dump))
        gold[doc.source_id] = doc.gold
    (directory / "corpus.gold.json").write_text(json.dumps(gold))
    return directory


def make_ruled_image(width: int = 640, height: int = 480, bars: int = 12, thickness: int = 8) -> BinaryImage:
    """Text-like fixture: evenly spaced horizontal bars with margins."""
    pixels = np.zeros((height, width), dtype=bool)
    margin_y, margin_x = 60, 60
    span = (height - 2 * margin_y) // bars
    for bar in range(bars):
        y = margin_y + bar * span
        pixels[y:y + thickness, margin_x:width - margin_x] = True
    return BinaryImage(pixels)


@pytest.fixture
def ruled_image() -> BinaryImage:
    return make_ruled_image()


def box_token(text: str, x: float, y: float, confidence: float = 0.9,
              width: float | None = None, height: float = 24.0) -> OcrToken:
    """Axis-aligned token centered at (x + w/2, y)."""
    w = width if width is not None else max(12.0, 14.0 * len(text))
    top = y - height / 2
    return OcrToken(
        polygon=((x, top), (x + w, top), (x + w, top + height), (x, top + height)),
        text=text,
        confidence=confidence,
    )


def stream_of(tokens, source_id: str = "test-doc") -> TokenStream:
    return TokenStream(tokens=tuple(tokens), source_id=source_id)
