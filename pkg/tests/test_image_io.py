"""Raster file round-trips and format detection."""

from __future__ import annotations

import numpy as np
import pytest

from markparse.errors import InvalidImage
from markparse.image_io import (
    binary_to_gray,
    read_image,
    read_pbm,
    read_pgm,
    write_pbm,
    write_pgm,
    write_png_gray,
    write_png_rgb,
)
from markparse.preprocess import BinaryImage, GrayImage


def test_pgm_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    gray = GrayImage(rng.integers(0, 256, size=(13, 17), dtype=np.uint8))
    path = tmp_path / "img.pgm"
    write_pgm(gray, path)
    back = read_pgm(path)
    assert (back.pixels == gray.pixels).all()


def test_pbm_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    binary = BinaryImage(rng.random((9, 21)) < 0.5)
    path = tmp_path / "img.pbm"
    write_pbm(binary, path)
    back = read_pbm(path)
    assert (back.pixels == binary.pixels).all()


def test_read_image_dispatches_pgm(tmp_path):
    gray = GrayImage(np.arange(12, dtype=np.uint8).reshape(3, 4))
    path = tmp_path / "img.pgm"
    write_pgm(gray, path)
    loaded = read_image(path)
    assert isinstance(loaded, GrayImage)
    assert (loaded.pixels == gray.pixels).all()


def test_read_png_rgb(tmp_path):
    rng = np.random.default_rng(2)
    rgb = rng.integers(0, 256, size=(8, 6, 3), dtype=np.uint8)
    path = tmp_path / "img.png"
    write_png_rgb(rgb, path)
    loaded = read_image(path)
    assert isinstance(loaded, np.ndarray)
    assert (loaded == rgb).all()


def test_read_png_gray(tmp_path):
    gray = GrayImage(np.arange(40, dtype=np.uint8).reshape(5, 8))
    path = tmp_path / "img.png"
    write_png_gray(gray, path)
    loaded = read_image(path)
    assert isinstance(loaded, GrayImage)
    assert (loaded.pixels == gray.pixels).all()


def test_unknown_format_rejected(tmp_path):
    path = tmp_path / "junk.bin"
    path.write_bytes(b"not an image at all")
    with pytest.raises(InvalidImage):
        read_image(path)


def test_truncated_pgm_rejected(tmp_path):
    path = tmp_path / "short.pgm"
    path.write_bytes(b"P5\n4 4\n255\nabc")
    with pytest.raises(InvalidImage):
        read_pgm(path)


def test_binary_to_gray_levels():
    binary = BinaryImage(np.array([[True, False]]))
    gray = binary_to_gray(binary)
    assert gray.pixels[0, 0] == 0
    assert gray.pixels[0, 1] == 255
