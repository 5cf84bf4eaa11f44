"""Combinatorial model of Barański carpets.

A carpet is determined by division counts n, m, a digit set selecting
cells of the n x m grid, and optional exact rational contraction ratios
for the two base interval subdivisions.  Digits are kept in a canonical
order (bottom row first, left to right) and the letters 1..N of the
alphabet refer to digits in that order.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import geometry
from .geometry import IntersectionOracle, build_oracle


class CarpetError(ValueError):
    """Malformed carpet definition."""


def _canonical(digits):
    return tuple(sorted(digits, key=lambda d: (d[1], d[0])))


@dataclass(frozen=True)
class CarpetSpec:
    n: int
    m: int
    digits: tuple[tuple[int, int], ...]
    hratios: tuple[Fraction, ...] | None = None
    vratios: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.n < 2 or self.m < 2:
            raise CarpetError("division counts must be at least 2")
        digits = _canonical(tuple((int(a), int(b)) for a, b in self.digits))
        if not digits:
            raise CarpetError("digit set must be nonempty")
        if len(set(digits)) != len(digits):
            raise CarpetError("duplicate digit")
        for d1, d2 in digits:
            if not (0 <= d1 < self.n and 0 <= d2 < self.m):
                raise CarpetError(f"digit {(d1, d2)} outside the {self.n}x{self.m} grid")
        object.__setattr__(self, "digits", digits)
        for name, ratios, count in (
            ("hratios", self.hratios, self.n),
            ("vratios", self.vratios, self.m),
        ):
            if ratios is None:
                continue
            ratios = tuple(Fraction(r) for r in ratios)
            if len(ratios) != count:
                raise CarpetError(f"{name} must have {count} entries")
            if any(r <= 0 for r in ratios):
                raise CarpetError(f"{name} entries must be positive")
            if sum(ratios) != 1:
                raise CarpetError(f"{name} must sum to exactly 1")
            object.__setattr__(self, name, ratios)

    @property
    def alphabet_size(self) -> int:
        return len(self.digits)

    def letters(self):
        return range(1, len(self.digits) + 1)

    def horizontal_ratios(self) -> tuple[Fraction, ...]:
        return self.hratios or tuple([Fraction(1, self.n)] * self.n)

    def vertical_ratios(self) -> tuple[Fraction, ...]:
        return self.vratios or tuple([Fraction(1, self.m)] * self.m)

    def is_uniform(self) -> bool:
        return self.hratios is None and self.vratios is None

    def is_fractal_square(self) -> bool:
        return self.is_uniform() and self.n == self.m

    def companion(self) -> "CarpetSpec":
        return CarpetSpec(self.n, self.m, self.digits)

    def to_json(self) -> str:
        data = {"n": self.n, "m": self.m, "digits": [list(d) for d in self.digits]}
        if self.hratios is not None:
            data["hratios"] = [f"{r.numerator}/{r.denominator}" for r in self.hratios]
        if self.vratios is not None:
            data["vratios"] = [f"{r.numerator}/{r.denominator}" for r in self.vratios]
        return json.dumps(data)

    def to_grid(self) -> str:
        """ASCII grid, top row first.  Only valid for uniform carpets."""
        if not self.is_uniform():
            raise CarpetError("ratio-bearing carpets cannot be written as a grid")
        cells = set(self.digits)
        rows = []
        for d2 in range(self.m - 1, -1, -1):
            rows.append("".join("#" if (d1, d2) in cells else "." for d1 in range(self.n)))
        return "\n".join(rows)


def parse_carpet(text: str) -> CarpetSpec:
    """Parse a carpet from JSON or from an ASCII grid ('#'/'.')."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_grid(stripped)


def _parse_json(text: str) -> CarpetSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CarpetError(f"invalid JSON: {e}") from e
    try:
        n = int(data["n"])
        m = int(data["m"])
        digits = [(int(d[0]), int(d[1])) for d in data["digits"]]
    except (KeyError, TypeError, IndexError) as e:
        raise CarpetError(f"missing or malformed field: {e}") from e
    hratios = tuple(Fraction(r) for r in data["hratios"]) if "hratios" in data else None
    vratios = tuple(Fraction(r) for r in data["vratios"]) if "vratios" in data else None
    return CarpetSpec(n, m, tuple(digits), hratios, vratios)


def _parse_grid(text: str) -> CarpetSpec:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CarpetError("empty grid")
    m = len(lines)
    n = len(lines[0])
    digits = []
    for row, line in enumerate(lines):
        if len(line) != n:
            raise CarpetError("ragged grid: all lines must have equal length")
        d2 = m - 1 - row  # first line is the top row
        for d1, ch in enumerate(line):
            if ch == "#":
                digits.append((d1, d2))
            elif ch != ".":
                raise CarpetError(f"unexpected grid character {ch!r}")
    return CarpetSpec(n, m, tuple(digits))


def digit_letter(spec: CarpetSpec, digit) -> int:
    return spec.digits.index(tuple(digit)) + 1


def cylinder_adjacency(spec: CarpetSpec, oracle: IntersectionOracle | None = None):
    """Unordered letter pairs {i, j} whose first-order cylinders intersect.

    K_i ∩ K_j = φ_i(K ∩ (K + d_j - d_i)) up to affine scaling, so the
    pair is adjacent iff the digit offset is a nonzero unit offset that
    the oracle affirms.
    """
    if oracle is None:
        oracle = build_oracle(spec.companion())
    pairs = set()
    for i, di in enumerate(spec.digits, start=1):
        for j, dj in enumerate(spec.digits, start=1):
            if j <= i:
                continue
            off = (dj[0] - di[0], dj[1] - di[1])
            if -1 <= off[0] <= 1 and -1 <= off[1] <= 1 and oracle.intersects(off):
                pairs.add(frozenset((i, j)))
    return pairs


@dataclass(frozen=True)
class ConditionReport:
    cross_intersection: bool
    vertical_separation: bool
    top_isolated: bool
    top_letter: int | None

    def to_dict(self):
        return {
            "crossIntersection": self.cross_intersection,
            "verticalSeparation": self.vertical_separation,
            "topIsolated": self.top_isolated,
            "topLetter": self.top_letter,
        }


def check_conditions(spec: CarpetSpec, oracle: IntersectionOracle | None = None) -> ConditionReport:
    """Evaluate the three separation conditions on the companion carpet."""
    if oracle is None:
        oracle = build_oracle(spec.companion())
    adjacency = cylinder_adjacency(spec, oracle)
    cross = True
    vertical = True
    for pair in adjacency:
        i, j = sorted(pair)
        di, dj = spec.digits[i - 1], spec.digits[j - 1]
        off = (dj[0] - di[0], dj[1] - di[1])
        if off[0] != 0 and off[1] != 0:
            cross = False
        if off[1] != 0:
            vertical = False
    top_digits = [i for i, d in enumerate(spec.digits, start=1) if d[1] == spec.m - 1]
    top_letter = None
    top_isolated = False
    if len(top_digits) == 1:
        cand = top_digits[0]
        if not any(cand in pair for pair in adjacency):
            top_isolated = True
            top_letter = cand
    return ConditionReport(cross, vertical, top_isolated, top_letter)


@dataclass(frozen=True)
class HBlock:
    row: int
    columns: tuple[int, ...]
    letters: tuple[int, ...]
    kind: str  # Full | Left | Right | Interior

    @property
    def size(self) -> int:
        return len(self.columns)


def h_blocks(spec: CarpetSpec) -> list[HBlock]:
    """Maximal runs of consecutive occupied columns, row by row."""
    by_cell = {d: i for i, d in enumerate(spec.digits, start=1)}
    blocks = []
    for row in range(spec.m):
        cols = sorted(c for c, r in spec.digits if r == row)
        run: list[int] = []
        for c in cols + [None]:
            if run and (c is None or c != run[-1] + 1):
                columns = tuple(run)
                if len(columns) == spec.n:
                    kind = "Full"
                elif columns[0] == 0:
                    kind = "Left"
                elif columns[-1] == spec.n - 1:
                    kind = "Right"
                else:
                    kind = "Interior"
                letters = tuple(by_cell[(col, row)] for col in columns)
                blocks.append(HBlock(row, columns, letters, kind))
                run = []
            if c is not None:
                run.append(c)
    return blocks


@dataclass(frozen=True)
class HBlockProfile:
    block_sizes: tuple[int, ...]  # sorted multiset
    pair_sizes: tuple[tuple[int, int], ...]  # sorted multiset of (left, right)
    fiber: tuple[int, ...]  # cylinder count per row, bottom first

    def to_dict(self):
        return {
            "blockSizes": list(self.block_sizes),
            "pairSizes": [list(p) for p in self.pair_sizes],
            "fiber": list(self.fiber),
        }


def profile(spec: CarpetSpec) -> HBlockProfile:
    blocks = h_blocks(spec)
    sizes = tuple(sorted(b.size for b in blocks))
    pairs = []
    for row in range(spec.m):
        lefts = [b for b in blocks if b.row == row and b.kind == "Left"]
        rights = [b for b in blocks if b.row == row and b.kind == "Right"]
        if lefts and rights:
            pairs.append((lefts[0].size, rights[0].size))
    fiber = tuple(
        sum(1 for d in spec.digits if d[1] == row) for row in range(spec.m)
    )
    assert sum(sizes) == len(spec.digits)
    per_row = Counter()
    for b in blocks:
        per_row[b.row] += b.size
    assert all(per_row[row] == fiber[row] for row in range(spec.m))
    return HBlockProfile(sizes, tuple(sorted(pairs)), fiber)


# re-export for convenience
render_svg = geometry.render_svg
