# dpk/cli/svg.py
"""Line plots on a fixed 800x600 canvas: first column on x, every numeric column after it as a series."""

import math
from typing import List, Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 600
MARGIN = 70
COLOURS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _numeric(column: Sequence) -> bool:
    return all(isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v) for v in column)


def _ticks(lo: float, hi: float, count: int = 6) -> List[float]:
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * k / (count - 1) for k in range(count)]


def render_svg(columns: Sequence[str], rows: Sequence[Sequence], title: str = "") -> str:
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="30" text-anchor="middle" font-size="16">{escape(title)}</text>',
    ]
    cols = list(zip(*rows)) if rows else []
    series = [k for k in range(1, len(cols)) if _numeric(cols[k])]
    if not cols or not _numeric(cols[0]) or not series:
        out.append("</svg>")
        return "\n".join(out) + "\n"

    xs = [float(v) for v in cols[0]]
    ys = [float(v) for k in series for v in cols[k]]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0

    def px(x: float) -> float:
        return MARGIN + (x - x_lo) / (x_hi - x_lo) * (WIDTH - 2 * MARGIN)

    def py(y: float) -> float:
        return HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * (HEIGHT - 2 * MARGIN)

    base = HEIGHT - MARGIN
    out.append(f'<line x1="{MARGIN}" y1="{base}" x2="{WIDTH - MARGIN}" y2="{base}" stroke="black"/>')
    out.append(f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{base}" stroke="black"/>')
    for v in _ticks(x_lo, x_hi):
        out.append(f'<line x1="{px(v):.2f}" y1="{base}" x2="{px(v):.2f}" y2="{base + 5}" stroke="black"/>')
        out.append(f'<text x="{px(v):.2f}" y="{base + 20}" text-anchor="middle" font-size="11">{v:.4g}</text>')
    for v in _ticks(y_lo, y_hi):
        out.append(f'<line x1="{MARGIN - 5}" y1="{py(v):.2f}" x2="{MARGIN}" y2="{py(v):.2f}" stroke="black"/>')
        out.append(f'<text x="{MARGIN - 8}" y="{py(v) + 4:.2f}" text-anchor="end" font-size="11">{v:.4g}</text>')
    out.append(
        f'<text x="{WIDTH / 2}" y="{HEIGHT - 20}" text-anchor="middle" font-size="13">{escape(columns[0])}</text>'
    )

    for i, k in enumerate(series):
        colour = COLOURS[i % len(COLOURS)]
        points = " ".join(f"{px(x):.2f},{py(float(y)):.2f}" for x, y in zip(xs, cols[k]))
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{points}"/>')
        out.append(
            f'<text x="{WIDTH - MARGIN}" y="{MARGIN + 16 * i}" text-anchor="end" font-size="12" '
            f'fill="{colour}">{escape(columns[k])}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
