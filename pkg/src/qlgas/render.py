"""Deterministic byte-stream renderers for probability distributions.

Both writers are pure: identical inputs produce identical bytes, so their
outputs can be pinned as golden files.
"""

from __future__ import annotations

import math

from .lattice import PositionDistribution


def render_pgm(dist: PositionDistribution, width: int, height: int) -> bytes:
    """Render a distribution as a plain-text (P2) PGM image.

    The grid is ``width`` cells by ``height`` timesteps; pixel values are
    round(255 * p / p_max) with round-half-up, where p_max is the frame
    maximum (an all-zero frame renders as all-zero pixels).  The bottom row
    of the image is t = 0, so time runs upward when viewed.
    """
    for (t, x) in dist.entries:
        if not (0 <= t < height and 0 <= x < width):
            raise ValueError(f"entry ({t}, {x}) outside {width}x{height} grid")
    p_max = max(dist.entries.values(), default=0.0)
    if p_max <= 0.0:
        p_max = 1.0
    lines = [f"P2\n{width} {height}\n255\n"]
    for t in range(height - 1, -1, -1):
        row = dist.row(t)
        pixels = [
            math.floor(255.0 * row.get(x, 0.0) / p_max + 0.5) for x in range(width)
        ]
        lines.append(" ".join(str(p) for p in pixels) + "\n")
    return "".join(lines).encode("ascii")


def write_csv(dist: PositionDistribution, header: tuple[str, str, str] = ("t", "x", "p")) -> bytes:
    """Serialize a distribution as CSV rows sorted by (t, x).

    Probabilities are printed with 17 significant digits, which round-trips
    doubles exactly.
    """
    lines = [",".join(header) + "\n"]
    for t, x, p in dist.sorted_entries():
        lines.append(f"{t},{x},{format(p, '.17g')}\n")
    return "".join(lines).encode("ascii")
