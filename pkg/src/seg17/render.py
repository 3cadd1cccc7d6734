"""Draw segment patterns as SVG or terminal art.

The digit cell is 1.0 wide and 2.0 tall, y growing downward:

      a1   a2
        h i j        upper diagonals h,j and center vertical i
    f          b
      g1   g2
        k l m        lower diagonals k,m and center vertical l
    e          c
    p                p runs from the left edge to the center, y=1.5
      d1   d2

All 17 strokes are straight lines, so every shape renders as a single
SVG <line> element and the number of on-state elements in a document is
exactly the total number of lit segments.  Placement of ``p`` is a
design choice (only "lower part" is fixed by the architecture) and is
isolated in the geometry table below.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .exceptions import RenderError, WordRangeError
from .segments import FULL_WORD, SEGMENT_NAMES

Point = tuple[float, float]

_SHAPES: dict[str, tuple[Point, Point]] = {
    "a1": ((0.0, 0.0), (0.5, 0.0)),
    "a2": ((0.5, 0.0), (1.0, 0.0)),
    "b":  ((1.0, 0.0), (1.0, 1.0)),
    "c":  ((1.0, 1.0), (1.0, 2.0)),
    "d1": ((0.0, 2.0), (0.5, 2.0)),
    "d2": ((0.5, 2.0), (1.0, 2.0)),
    "e":  ((0.0, 1.0), (0.0, 2.0)),
    "f":  ((0.0, 0.0), (0.0, 1.0)),
    "g1": ((0.0, 1.0), (0.5, 1.0)),
    "g2": ((0.5, 1.0), (1.0, 1.0)),
    "h":  ((0.0, 0.0), (0.5, 1.0)),
    "i":  ((0.5, 0.0), (0.5, 1.0)),
    "j":  ((1.0, 0.0), (0.5, 1.0)),
    "k":  ((0.5, 1.0), (0.0, 2.0)),
    "l":  ((0.5, 1.0), (0.5, 2.0)),
    "m":  ((0.5, 1.0), (1.0, 2.0)),
    "p":  ((0.0, 1.5), (0.5, 1.5)),
}


@dataclass(frozen=True)
class GeometrySpec:
    """Per-segment line endpoints in the normalized 1.0 x 2.0 cell."""

    shapes: dict[str, tuple[Point, Point]]
    stroke: float = 0.08  # stroke width, fraction of cell width
    gap: float = 0.25     # spacing between digit cells, fraction of cell width


_GEOMETRY = GeometrySpec(shapes=dict(_SHAPES))


def geometry() -> GeometrySpec:
    """The fixed built-in 17-segment geometry."""
    return _GEOMETRY


@dataclass(frozen=True)
class RenderStyle:
    on_color: str = "#ff2a2a"
    off_color: str = "#2e2e2e"
    background: str = "#101010"
    scale: float = 64.0  # pixels per cell width
    show_off: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise RenderError(f"scale must be positive, got {self.scale}")


def _check_words(words: Sequence[int]) -> None:
    for word in words:
        if not 0 <= word <= FULL_WORD:
            raise WordRangeError(word)


def render_svg(words: Sequence[int], style: RenderStyle = RenderStyle()) -> str:
    """Render packed words as one SVG document, digits left to right.

    Output is byte-deterministic for fixed inputs.  Lit segments carry
    class "on"; with show_off, unlit segments carry class "off".
    """
    if not words:
        raise RenderError("nothing to render: empty pattern sequence")
    _check_words(words)
    geo = _GEOMETRY
    pad = 0.25
    cells_wide = len(words) + geo.gap * (len(words) - 1)
    width = (cells_wide + 2 * pad) * style.scale
    height = (2.0 + 2 * pad) * style.scale
    stroke = geo.stroke * style.scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
        f'height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f"<style>.on{{stroke:{style.on_color};stroke-width:{stroke:g};"
        f"stroke-linecap:round}}.off{{stroke:{style.off_color};"
        f"stroke-width:{stroke:g};stroke-linecap:round}}</style>",
        f'<rect width="100%" height="100%" fill="{style.background}"/>',
    ]
    for position, word in enumerate(words):
        x0 = pad + position * (1.0 + geo.gap)
        # off strokes first so lit segments draw over the ghosting
        for lit in (False, True):
            for index, name in enumerate(SEGMENT_NAMES):
                if bool(word >> index & 1) is not lit:
                    continue
                if not lit and not style.show_off:
                    continue
                (sx1, sy1), (sx2, sy2) = geo.shapes[name]
                out.append(
                    f'<line class="{"on" if lit else "off"}" '
                    f'x1="{(x0 + sx1) * style.scale:.2f}" '
                    f'y1="{(pad + sy1) * style.scale:.2f}" '
                    f'x2="{(x0 + sx2) * style.scale:.2f}" '
                    f'y2="{(pad + sy2) * style.scale:.2f}"/>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# Terminal art: 9 columns x 9 rows per digit, one gap column between
# digits.  (row, column, char) cells per segment; digits draw segments
# in canonical order and later segments overwrite shared cells.
_CELL_COLS = 9
_CELL_ROWS = 9
_TERM_CELLS: dict[str, tuple[tuple[int, int, str], ...]] = {
    "a1": ((0, 1, "_"), (0, 2, "_"), (0, 3, "_")),
    "a2": ((0, 5, "_"), (0, 6, "_"), (0, 7, "_")),
    "b":  ((1, 8, "|"), (2, 8, "|"), (3, 8, "|"), (4, 8, "|")),
    "c":  ((5, 8, "|"), (6, 8, "|"), (7, 8, "|"), (8, 8, "|")),
    "d1": ((8, 1, "_"), (8, 2, "_"), (8, 3, "_")),
    "d2": ((8, 5, "_"), (8, 6, "_"), (8, 7, "_")),
    "e":  ((5, 0, "|"), (6, 0, "|"), (7, 0, "|"), (8, 0, "|")),
    "f":  ((1, 0, "|"), (2, 0, "|"), (3, 0, "|"), (4, 0, "|")),
    "g1": ((4, 1, "-"), (4, 2, "-"), (4, 3, "-")),
    "g2": ((4, 5, "-"), (4, 6, "-"), (4, 7, "-")),
    "h":  ((1, 1, "\\"), (2, 2, "\\"), (3, 3, "\\")),
    "i":  ((1, 4, "|"), (2, 4, "|"), (3, 4, "|"), (4, 4, "|")),
    "j":  ((1, 7, "/"), (2, 6, "/"), (3, 5, "/")),
    "k":  ((5, 3, "/"), (6, 2, "/"), (7, 1, "/")),
    "l":  ((5, 4, "|"), (6, 4, "|"), (7, 4, "|"), (8, 4, "|")),
    "m":  ((5, 5, "\\"), (6, 6, "\\"), (7, 7, "\\")),
    "p":  ((6, 0, "-"), (6, 1, "-"), (6, 2, "-"), (6, 3, "-")),
}


def render_terminal(words: Sequence[int]) -> str:
    """Render packed words as a fixed-grid text picture; [] gives ""."""
    if not words:
        return ""
    _check_words(words)
    total = len(words) * (_CELL_COLS + 1) - 1
    grid = [[" "] * total for _ in range(_CELL_ROWS)]
    for position, word in enumerate(words):
        left = position * (_CELL_COLS + 1)
        for index, name in enumerate(SEGMENT_NAMES):
            if not word >> index & 1:
                continue
            for row, col, char in _TERM_CELLS[name]:
                grid[row][left + col] = char
    return "\n".join("".join(row).rstrip() for row in grid)
