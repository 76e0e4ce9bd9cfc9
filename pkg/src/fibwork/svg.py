"""Deterministic SVG renderings of tilings and chain galleries.

Pure string construction — same tiling in, same bytes out.  Free dominoes
are gray, forced verticals blue, squares stay white behind the grid, and
every board carries its weight as a q^d label.
"""

from __future__ import annotations

from .chains import ChainBlock
from .tilings import Tiling, weight_degree

CELL = 36
PAD = 12
GRID = "#b8b8b8"
FREE_FILL = "#cfcfcf"
FORCED_FILL = "#5b8dd9"
EDGE = "#333333"


def _rect(x: float, y: float, w: float, h: float, fill: str) -> str:
    return (
        f'<rect x="{x}" y="{y}" width="{w}" height="{h}" '
        f'fill="{fill}" stroke="{EDGE}" stroke-width="1.5"/>'
    )


def _board_elems(t: Tiling, ox: float, oy: float, cell: float) -> list[str]:
    """Board grid + dominoes with top-left corner at (ox, oy)."""
    m, n = t.m, t.n
    w, h = m * cell, n * cell
    out = [
        f'<rect x="{ox}" y="{oy}" width="{w}" height="{h}" '
        f'fill="white" stroke="{EDGE}" stroke-width="1.5"/>'
    ]
    for i in range(1, m):
        x = ox + i * cell
        out.append(
            f'<line x1="{x}" y1="{oy}" x2="{x}" y2="{oy + h}" '
            f'stroke="{GRID}" stroke-width="1"/>'
        )
    for j in range(1, n):
        y = oy + j * cell
        out.append(
            f'<line x1="{ox}" y1="{y}" x2="{ox + w}" y2="{y}" '
            f'stroke="{GRID}" stroke-width="1"/>'
        )
    # cell (i, j) has top-right corner (i, j); rows count up from the bottom
    for kind, i, j in sorted(t.dominoes()):
        if kind == "h":
            x = ox + (i - 2) * cell
            y = oy + (n - j) * cell
            out.append(_rect(x, y, 2 * cell, cell, FREE_FILL))
        else:
            x = ox + (i - 1) * cell
            y = oy + (n - j) * cell
            fill = FORCED_FILL if kind == "forced" else FREE_FILL
            out.append(_rect(x, y, cell, 2 * cell, fill))
    return out


def _label(x: float, y: float, text: str, size: int = 14) -> str:
    return (
        f'<text x="{x}" y="{y}" font-family="monospace" '
        f'font-size="{size}">{text}</text>'
    )


def _document(width: float, height: float, elems: list[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head] + elems + ["</svg>"]) + "\n"


def tiling_svg(t: Tiling, cell: float = CELL) -> str:
    """One board with its weight label q^d underneath."""
    w = t.m * cell + 2 * PAD
    h = t.n * cell + 2 * PAD + 20
    elems = _board_elems(t, PAD, PAD, cell)
    elems.append(_label(PAD, t.n * cell + PAD + 16, f"q^{weight_degree(t)}"))
    return _document(max(w, 80), h, elems)


def chain_gallery_svg(blocks: list[ChainBlock], cell: float = 22) -> str:
    """All blocks, one row each, members left to right from maximal to
    minimal, every board labeled with its weight."""
    if not blocks:
        return _document(80, 40, [_label(PAD, 24, "empty")])
    m = blocks[0].tilings[0].m
    board_w = m * cell + PAD
    board_h = 2 * cell + 26
    width = 2 * PAD + max(b.size for b in blocks) * board_w + 160
    height = 2 * PAD + len(blocks) * board_h
    elems = []
    for row, block in enumerate(blocks):
        oy = PAD + row * board_h
        elems.append(
            _label(
                PAD,
                oy + cell + 4,
                f"[{block.min_degree},{block.max_degree}] sig={list(block.signature)}",
                size=11,
            )
        )
        for col, t in enumerate(block.tilings):
            ox = PAD + 160 + col * board_w
            elems.extend(_board_elems(t, ox, oy, cell))
            elems.append(
                _label(ox, oy + 2 * cell + 16, f"q^{weight_degree(t)}", size=10)
            )
    return _document(width, height, elems)
