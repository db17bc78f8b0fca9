"""Reading-order line reconstruction from unordered OCR tokens.

Tokens come back from the engine in no useful order. A line is rebuilt
by anchoring on a token and collecting every token whose vertical center
falls within a margin of the anchor's, then sorting left to right. The
default margin is 35 pixels, which suits typical scanned-form row
spacing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter
from .ocr import OcrToken, TokenStream
from .text import normalize


@dataclass(frozen=True)
class LayoutConfig:
    """Line-grouping knobs. ``y_margin`` is the vertical band half-width."""

    y_margin: float = 35.0

    def __post_init__(self):
        if self.y_margin <= 0:
            raise InvalidParameter("y_margin must be > 0")


@dataclass(frozen=True)
class TextLine:
    """Tokens of one visual line, ordered by ascending center-x.

    ``anchor_y`` is the vertical center of the token that anchored the
    band; ``anchor_index`` is that token's index in the source stream.
    """

    tokens: tuple[OcrToken, ...]
    anchor_y: float
    anchor_index: int


def token_center(token: OcrToken) -> tuple[float, float]:
    """Arithmetic mean of the 4 polygon points."""
    xs = sum(p[0] for p in token.polygon)
    ys = sum(p[1] for p in token.polygon)
    return xs / 4.0, ys / 4.0


def group_lines(stream: TokenStream, config: LayoutConfig = LayoutConfig()) -> list[TextLine]:
    """Partition tokens into lines via anchor + y-band sweep.

    Anchors are taken in descending confidence (emission order breaks
    ties); each anchor claims every still-unassigned token within
    ``y_margin`` of its vertical center. Within a line tokens are sorted
    by center-x (emission order on ties); lines are returned sorted by
    anchor_y.
    """
    tokens = stream.tokens
    if not tokens:
        return []
    centers = [token_center(t) for t in tokens]
    sweep = sorted(range(len(tokens)), key=lambda i: (-tokens[i].confidence, i))
    assigned = [False] * len(tokens)
    lines: list[TextLine] = []
    for anchor in sweep:
        if assigned[anchor]:
            continue
        anchor_y = centers[anchor][1]
        members = [
            i for i in range(len(tokens))
            if not assigned[i] and abs(centers[i][1] - anchor_y) <= config.y_margin
        ]
        for i in members:
            assigned[i] = True
        members.sort(key=lambda i: (centers[i][0], i))
        lines.append(TextLine(
            tokens=tuple(tokens[i] for i in members),
            anchor_y=anchor_y,
            anchor_index=anchor,
        ))
    lines.sort(key=lambda line: line.anchor_y)
    return lines


def line_text(line: TextLine) -> str:
    """Normalized token texts joined with single spaces."""
    parts = [normalize(t.text) for t in line.tokens]
    return " ".join(p for p in parts if p)
