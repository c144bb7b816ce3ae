"""ASCII and SVG pictures of a lattice path below its barrier line."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codewords import B, E, Letter, validate_word
from .lattice import LatticePath, tail_to_path

DEFAULT_CELL = 40


@dataclass(frozen=True)
class RenderSpec:
    path: LatticePath
    barrier: int
    fmt: str = "ascii"  # "ascii" or "svg"
    cell: int = DEFAULT_CELL


def word_path(word: Sequence[Letter]) -> tuple[LatticePath, int]:
    """Split a code word into marker block and tail, return the tail's
    path and the barrier index (= marker block length)."""
    w = validate_word(word)
    if not w:
        raise ValueError("empty word has no path")
    i = 0
    while i < len(w) and w[i] in (B, E):
        i += 1
    return tail_to_path(w[i:], i), i


def render(spec: RenderSpec) -> str:
    if spec.fmt == "ascii":
        return render_ascii(spec.path, spec.barrier)
    if spec.fmt == "svg":
        return render_svg(spec.path, spec.barrier, spec.cell)
    raise ValueError(f"unknown render format: {spec.fmt!r}")


def render_ascii(path: LatticePath, barrier: int) -> str:
    """Character grid: 'o' path vertices, '-'/'|' path edges, '/' barrier
    points, '.' everything else."""
    pts = path.points()
    vertex = set(pts)
    hedges = set()
    vedges = set()
    for a, b in zip(pts, pts[1:]):
        if b[0] == a[0] + 1:
            hedges.add(a)  # edge a -> (a.x+1, a.y)
        else:
            vedges.add(a)  # edge a -> (a.x, a.y+1)
    width = max(x for x, _ in pts)
    height = max(y for _, y in pts)
    lines = []
    for y in range(height, -1, -1):
        cells = []
        for x in range(width + 1):
            if (x, y) in vertex:
                cells.append("o")
            elif y == x + barrier:
                cells.append("/")
            else:
                cells.append(".")
            if x < width:
                cells.append("-" if (x, y) in hedges else " ")
        lines.append(f"{y:>3} | " + "".join(cells))
        if y > 0:
            marks = []
            for x in range(width + 1):
                marks.append("|" if (x, y - 1) in vedges else " ")
                if x < width:
                    marks.append(" ")
            lines.append("    | " + "".join(marks))
    lines.append("    +-" + "-" * (2 * width + 1))
    lines.append("      " + " ".join(str(x % 10) for x in range(width + 1)))
    lines.append(f"path {path.start} -> {path.end}, {len(path.steps)} steps")
    lines.append(f"barrier y = x + {barrier} marked '/'")
    return "\n".join(lines) + "\n"


def render_svg(path: LatticePath, barrier: int, cell: int = DEFAULT_CELL) -> str:
    """Standalone SVG: grid, dashed barrier, path polyline with one
    circle per vertex, endpoint and axis labels."""
    if cell < 4:
        raise ValueError(f"cell size too small: {cell}")
    pts = path.points()
    width = max(x for x, _ in pts)
    height = max(y for _, y in pts)
    margin = cell
    canvas_w = 2 * margin + max(width, 1) * cell
    canvas_h = 2 * margin + max(height, 1) * cell

    def px(x: int) -> int:
        return margin + x * cell

    def py(y: int) -> int:
        return margin + (height - y) * cell

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas_w}" '
        f'height="{canvas_h}" viewBox="0 0 {canvas_w} {canvas_h}">',
        '<g stroke="#cccccc" stroke-width="1">',
    ]
    for x in range(width + 1):
        parts.append(f'<line x1="{px(x)}" y1="{py(0)}" x2="{px(x)}" y2="{py(height)}"/>')
    for y in range(height + 1):
        parts.append(f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(width)}" y2="{py(y)}"/>')
    parts.append("</g>")
    # barrier y = x + barrier, clipped to the grid box
    bx_hi = min(width, height - barrier)
    if bx_hi >= 0:
        parts.append(
            f'<line x1="{px(0)}" y1="{py(barrier)}" x2="{px(bx_hi)}" y2="{py(bx_hi + barrier)}" '
            'stroke="black" stroke-width="1.5" stroke-dasharray="7,5"/>'
        )
        parts.append(
            f'<text x="{px(bx_hi) + 6}" y="{py(bx_hi + barrier)}" font-size="{cell // 3}">'
            f"y=x+{barrier}</text>"
        )
    poly = " ".join(f"{px(x)},{py(y)}" for x, y in pts)
    parts.append(f'<polyline points="{poly}" fill="none" stroke="black" stroke-width="2.5"/>')
    radius = max(2, cell // 10)
    for x, y in pts:
        parts.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="{radius}"/>')
    sx, sy = path.start
    ex, ey = path.end
    font = max(8, cell // 3)
    parts.append(f'<text x="{px(sx) - font}" y="{py(sy) + font}" font-size="{font}">({sx},{sy})</text>')
    parts.append(f'<text x="{px(ex) + 6}" y="{py(ey) - 6}" font-size="{font}">({ex},{ey})</text>')
    for x in range(width + 1):
        parts.append(f'<text x="{px(x) - 3}" y="{py(0) + font + 4}" font-size="{font - 2}">{x}</text>')
    for y in range(height + 1):
        parts.append(f'<text x="{px(0) - font - 4}" y="{py(y) + 4}" font-size="{font - 2}">{y}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
