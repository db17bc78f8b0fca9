"""Raster file I/O.

Gray input is accepted as PNG or binary PGM (P5); RGB input as PNG only.
Writers emit binary PGM (P5) for gray and binary PBM (P4) for binary
images, where a PBM 1-bit (black) is ink.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import InvalidImage
from .preprocess import BinaryImage, GrayImage

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def read_image(path: str | Path) -> np.ndarray | GrayImage:
    """Read PNG or PGM. Returns an RGB array for color PNG, else GrayImage."""
    data = Path(path).read_bytes()
    if data.startswith(PNG_MAGIC):
        return _read_png(data)
    if data.startswith(b"P5"):
        return read_pgm_bytes(data)
    raise InvalidImage(f"{path}: not a PNG or binary PGM file")


def _read_png(data: bytes) -> np.ndarray | GrayImage:
    try:
        img = Image.open(io.BytesIO(data))
        img.load()
    except UnidentifiedImageError as exc:
        raise InvalidImage(f"unreadable PNG: {exc}") from exc
    if img.width < 1 or img.height < 1:
        raise InvalidImage("zero-dimension PNG")
    if img.mode in ("1", "L", "LA", "I", "I;16"):
        return GrayImage(np.asarray(img.convert("L"), dtype=np.uint8))
    return np.asarray(img.convert("RGB"), dtype=np.uint8)


def write_png_gray(gray: GrayImage, path: str | Path) -> None:
    Image.fromarray(gray.pixels, mode="L").save(str(path), format="PNG")


def write_png_rgb(rgb: np.ndarray, path: str | Path) -> None:
    Image.fromarray(np.asarray(rgb, dtype=np.uint8), mode="RGB").save(str(path), format="PNG")


def _parse_netpbm_header(data: bytes, magic: bytes, fields: int) -> tuple[list[int], int]:
    """Parse a binary netpbm header; returns field values and data offset."""
    if not data.startswith(magic):
        raise InvalidImage(f"expected {magic.decode()} header")
    values: list[int] = []
    pos = 2
    while len(values) < fields:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        token = data[start:pos]
        if not token.isdigit():
            raise InvalidImage("malformed netpbm header")
        values.append(int(token))
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise InvalidImage("malformed netpbm header")
    return values, pos + 1


def read_pgm_bytes(data: bytes) -> GrayImage:
    (width, height, maxval), offset = _parse_netpbm_header(data, b"P5", 3)
    if width < 1 or height < 1:
        raise InvalidImage("zero-dimension PGM")
    if not 1 <= maxval <= 255:
        raise InvalidImage("only single-byte PGM is supported")
    expected = width * height
    raster = data[offset:offset + expected]
    if len(raster) != expected:
        raise InvalidImage("PGM raster truncated")
    return GrayImage(np.frombuffer(raster, dtype=np.uint8).reshape(height, width))


def read_pgm(path: str | Path) -> GrayImage:
    return read_pgm_bytes(Path(path).read_bytes())


def write_pgm(gray: GrayImage, path: str | Path) -> None:
    header = f"P5\n{gray.width} {gray.height}\n255\n".encode("ascii")
    Path(path).write_bytes(header + gray.pixels.tobytes())


def read_pbm(path: str | Path) -> BinaryImage:
    data = Path(path).read_bytes()
    (width, height), offset = _parse_netpbm_header(data, b"P4", 2)
    if width < 1 or height < 1:
        raise InvalidImage("zero-dimension PBM")
    row_bytes = (width + 7) // 8
    expected = row_bytes * height
    raster = data[offset:offset + expected]
    if len(raster) != expected:
        raise InvalidImage("PBM raster truncated")
    rows = np.frombuffer(raster, dtype=np.uint8).reshape(height, row_bytes)
    bits = np.unpackbits(rows, axis=1)[:, :width]
    return BinaryImage(bits.astype(bool))


def write_pbm(binary: BinaryImage, path: str | Path) -> None:
    header = f"P4\n{binary.width} {binary.height}\n".encode("ascii")
    packed = np.packbits(binary.pixels.astype(np.uint8), axis=1)
    Path(path).write_bytes(header + packed.tobytes())


def binary_to_gray(binary: BinaryImage) -> GrayImage:
    """Render ink as black (0) on white (255) for engines that want gray."""
    return GrayImage(np.where(binary.pixels, 0, 255).astype(np.uint8))
