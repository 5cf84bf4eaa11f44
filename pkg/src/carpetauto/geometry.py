"""Exact intersection oracle and numeric projection for carpet attractors.

The oracle decides, for the companion attractor K (uniform ratios 1/n,
1/m over the same digit set), which of the nine offsets b in {-1,0,1}^2
satisfy K ∩ (K + b) ≠ ∅.  Descending one subdivision level maps the
question for offset b to the same question for the offset

    b' = (n*bx + d'1 - d1, m*by + d'2 - d2)

over digit pairs (d, d'); K ∩ (K + b) ≠ ∅ iff some such b' stays inside
{-1,0,1}^2 and itself survives.  The survivors therefore form the
greatest fixed point of this one-step filter on at most nine nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .carpet import CarpetSpec
    from .words import PeriodicWord

OFFSETS = tuple((bx, by) for by in (-1, 0, 1) for bx in (-1, 0, 1))


def offset_successors(spec, b):
    """All in-box offsets b' reachable from b in one subdivision step."""
    bx, by = b
    out = set()
    for d1, d2 in spec.digits:
        for e1, e2 in spec.digits:
            v = (spec.n * bx + e1 - d1, spec.m * by + e2 - d2)
            if -1 <= v[0] <= 1 and -1 <= v[1] <= 1:
                out.add(v)
    return out


@dataclass(frozen=True)
class IntersectionOracle:
    """Survivor set of the nine unit offsets for one digit set."""

    n: int
    m: int
    digits: tuple[tuple[int, int], ...]
    survivors: frozenset[tuple[int, int]]

    def intersects(self, b) -> bool:
        return tuple(b) in self.survivors


def build_oracle(spec: "CarpetSpec") -> IntersectionOracle:
    """Greatest fixed point of the offset filter; exact for the companion."""
    alive = set(OFFSETS)
    while True:
        kept = {b for b in alive if offset_successors(spec, b) & alive}
        if kept == alive:
            break
        alive = kept
    assert (0, 0) in alive
    assert all((-b[0], -b[1]) in alive for b in alive)
    return IntersectionOracle(spec.n, spec.m, spec.digits, frozenset(alive))


def chain_survivors(spec, depth: int = 9) -> frozenset:
    """Independent brute force: b survives iff a length-`depth` chain of
    digit-pair steps stays inside the box.  With at most nine offsets, a
    length-9 chain necessarily revisits a node, so depth 9 is exact."""
    memo = {}

    def alive(b, k):
        if k == 0:
            return True
        key = (b, k)
        if key not in memo:
            memo[key] = any(alive(v, k - 1) for v in offset_successors(spec, b))
        return memo[key]

    return frozenset(b for b in OFFSETS if alive(b, depth))


def project(spec: "CarpetSpec", word: "PeriodicWord", depth: int):
    """Approximate π(word) by the corner of the depth-k cylinder.

    Returns ((x, y), err) with exact rational coordinates and a float
    error bound of (max ratio)^depth per coordinate.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    hr = spec.horizontal_ratios()
    vr = spec.vertical_ratios()
    hleft = _cumulative(hr)
    vleft = _cumulative(vr)
    px = py = Fraction(0)
    wx = wy = Fraction(1)
    for k in range(1, depth + 1):
        d1, d2 = spec.digits[word.letter(k) - 1]
        px += wx * hleft[d1]
        py += wy * vleft[d2]
        wx *= hr[d1]
        wy *= vr[d2]
    rstar = max(max(hr), max(vr))
    return (px, py), float(rstar) ** depth


def _cumulative(ratios):
    acc = Fraction(0)
    out = []
    for r in ratios:
        out.append(acc)
        acc += r
    return out


def cylinder_rects(spec: "CarpetSpec", depth: int, cap: int = 10**6):
    """All depth-k cylinder rectangles as (x, y, w, h) Fractions, y-up."""
    if depth < 1:
        raise ValueError("depth must be positive")
    if len(spec.digits) ** depth > cap:
        raise ValueError(f"{len(spec.digits)}^{depth} rectangles exceed cap {cap}")
    hr = spec.horizontal_ratios()
    vr = spec.vertical_ratios()
    hleft = _cumulative(hr)
    vleft = _cumulative(vr)
    rects = [(Fraction(0), Fraction(0), Fraction(1), Fraction(1))]
    for _ in range(depth):
        nxt = []
        for x, y, w, h in rects:
            for d1, d2 in spec.digits:
                nxt.append((x + w * hleft[d1], y + h * vleft[d2], w * hr[d1], h * vr[d2]))
        rects = nxt
    return rects


def render_svg(spec: "CarpetSpec", depth: int, size: int = 512,
               fill: str = "#1f4e79", cap: int = 10**6) -> str:
    """SVG 1.1 document with one rectangle per depth-k cylinder."""
    rects = cylinder_rects(spec, depth, cap=cap)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    for x, y, w, h in rects:
        # carpet coordinates are y-up; SVG is y-down
        sx = float(x) * size
        sy = (1.0 - float(y) - float(h)) * size
        lines.append(
            f'<rect x="{sx:.4f}" y="{sy:.4f}" width="{float(w) * size:.4f}" '
            f'height="{float(h) * size:.4f}" fill="{fill}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines)


def _edge_coords(spec, side: str, depth: int):
    """Cross-axis coordinates of depth-k cells on one boundary edge.

    For side "left"/"right" returns the occupied j-values of cells in the
    leftmost/rightmost column; for "bottom"/"top" the occupied i-values of
    cells in the bottom/top row.  Computed by the obvious recursion, so it
    is independent of the fixed-point oracle.
    """
    import numpy as np

    if side == "left":
        sel = [d2 for d1, d2 in spec.digits if d1 == 0]
        base = spec.m
    elif side == "right":
        sel = [d2 for d1, d2 in spec.digits if d1 == spec.n - 1]
        base = spec.m
    elif side == "bottom":
        sel = [d1 for d1, d2 in spec.digits if d2 == 0]
        base = spec.n
    elif side == "top":
        sel = [d1 for d1, d2 in spec.digits if d2 == spec.m - 1]
        base = spec.n
    else:
        raise ValueError(side)
    coords = np.array([0], dtype=np.int64)
    digits = np.array(sorted(sel), dtype=np.int64)
    for _ in range(depth):
        if digits.size == 0:
            return np.array([], dtype=np.int64)
        coords = np.unique((base * coords[:, None] + digits[None, :]).ravel())
    return coords


def _edge_gap(spec, a_side: str, b_side: str, depth: int) -> int:
    """Minimal cell-coordinate distance between two boundary edge sets."""
    import numpy as np

    a = _edge_coords(spec, a_side, depth)
    b = _edge_coords(spec, b_side, depth)
    if a.size == 0 or b.size == 0:
        return -1
    idx = np.searchsorted(b, a)
    best = None
    for shift in (-1, 0):
        k = np.clip(idx + shift, 0, b.size - 1)
        d = np.abs(a - b[k]).min()
        best = d if best is None else min(best, d)
    return int(best)


def raster_gap(spec, b, depth: int = 9) -> int:
    """Cell gap between the depth-k rasterizations of K and K + b.

    Returns the minimal coordinate distance between facing boundary cells
    (<= 1 means the closed rasterizations touch), or -1 when one side of
    the boundary carries no cells at all (definite disjointness).
    Only meaningful for nonzero offsets.
    """
    bx, by = b
    if (bx, by) == (0, 0):
        return 0
    if bx != 0 and by != 0:
        corner_k = ((spec.n - 1) if bx > 0 else 0, (spec.m - 1) if by > 0 else 0)
        corner_t = ((spec.n - 1) if bx < 0 else 0, (spec.m - 1) if by < 0 else 0)
        if corner_k in spec.digits and corner_t in spec.digits:
            return 1
        return -1
    if bx == 1:
        return _edge_gap(spec, "right", "left", depth)
    if bx == -1:
        return _edge_gap(spec, "left", "right", depth)
    if by == 1:
        return _edge_gap(spec, "top", "bottom", depth)
    return _edge_gap(spec, "bottom", "top", depth)


def raster_overlap(spec, b, depth: int = 9) -> bool:
    """Depth-k rasterizations of K and K + b share or touch a cell."""
    gap = raster_gap(spec, b, depth)
    return gap >= 0 and gap <= 1
