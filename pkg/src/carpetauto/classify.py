"""Sufficient-condition decision procedure for carpet equivalence.

Two carpets with the same horizontal division count, both satisfying
cross intersection, each either top-isolated or vertically separated,
and with matching H-block and H-block-pair size multisets, are Hölder
equivalent; when both are fractal squares of the same base the
equivalence is Lipschitz.  The certificate is a letter bijection that
matches blocks and provably preserves the horizontal adjacency
relations, making the final simplified automata isometric.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .automaton import build_topology_automaton, surviving_time
from .carpet import CarpetSpec, check_conditions, h_blocks, profile
from .cross import from_topology_automaton
from .simplify import final_chain
from .words import PeriodicWord


class PreservationFailure(ValueError):
    """The constructed letter bijection fails adjacency preservation."""


@dataclass(frozen=True)
class LetterBijection:
    mapping: dict
    block_matching: tuple  # pairs of (E-block, F-block)

    def __call__(self, letter: int) -> int:
        return self.mapping[letter]

    def apply_word(self, w: PeriodicWord) -> PeriodicWord:
        return PeriodicWord(
            tuple(self.mapping[a] for a in w.preperiod),
            tuple(self.mapping[a] for a in w.period),
        )

    def to_dict(self):
        return {
            "map": {str(k): v for k, v in sorted(self.mapping.items())},
            "blocks": [
                {
                    "from": {"row": a.row, "columns": list(a.columns)},
                    "to": {"row": b.row, "columns": list(b.columns)},
                }
                for a, b in self.block_matching
            ],
        }


def _split_blocks(spec: CarpetSpec):
    """Separate pair-constituent blocks from free blocks, deterministically."""
    blocks = h_blocks(spec)
    by_row = {}
    for b in blocks:
        by_row.setdefault(b.row, []).append(b)
    pairs = []
    free = []
    for row in sorted(by_row):
        lefts = [b for b in by_row[row] if b.kind == "Left"]
        rights = [b for b in by_row[row] if b.kind == "Right"]
        if lefts and rights:
            pairs.append((lefts[0], rights[0]))
            used = {lefts[0], rights[0]}
        else:
            used = set()
        free.extend(b for b in by_row[row] if b not in used)
    pairs.sort(key=lambda p: (p[0].size, p[1].size, p[0].row))
    free.sort(key=lambda b: (b.size, b.row, b.columns[0]))
    return pairs, free


def build_letter_bijection(E: CarpetSpec, F: CarpetSpec) -> LetterBijection:
    """Match blocks of E to blocks of F and map letters positionally.

    Pair-blocks are matched first (equal left and right sizes required),
    then free blocks by size; within a block the j-th letter goes to the
    j-th letter.  The result is checked to preserve the in-row adjacency
    relation and the wrap-around relation of both carpets.
    """
    pairs_e, free_e = _split_blocks(E)
    pairs_f, free_f = _split_blocks(F)
    if len(pairs_e) != len(pairs_f) or len(free_e) != len(free_f):
        raise ValueError("block inventories do not match")
    mapping = {}
    matching = []
    for (le, re), (lf, rf) in zip(pairs_e, pairs_f):
        if le.size != lf.size or re.size != rf.size:
            raise ValueError("pair-block sizes do not match")
        for a, b in ((le, lf), (re, rf)):
            mapping.update(zip(a.letters, b.letters))
            matching.append((a, b))
    for a, b in zip(free_e, free_f):
        if a.size != b.size:
            raise ValueError("free block sizes do not match")
        mapping.update(zip(a.letters, b.letters))
        matching.append((a, b))
    bij = LetterBijection(mapping, tuple(matching))
    _verify_preservation(E, F, bij)
    return bij


def _verify_preservation(E, F, bij):
    ce = from_topology_automaton(build_topology_automaton(E))
    cf = from_topology_automaton(build_topology_automaton(F))
    for name, rel_e, rel_f in (("H", ce.PH, cf.PH), ("e1", ce.Pe1, cf.Pe1)):
        image = {(bij(i), bij(j)) for i, j in rel_e}
        if image != rel_f:
            missing = sorted(rel_f - image)
            extra = sorted(image - rel_f)
            raise PreservationFailure(
                f"{name}-relation not preserved: missing {missing}, extra {extra}"
            )


@dataclass(frozen=True)
class HypothesisRecord:
    name: str
    passed: bool
    detail: str

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: str  # HolderEquivalent | LipschitzEquivalent | Inconclusive
    reasons: tuple[HypothesisRecord, ...]
    certificate: LetterBijection | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "status": self.status,
                "hypotheses": [r.to_dict() for r in self.reasons],
                "certificate": None if self.certificate is None else self.certificate.to_dict(),
            }
        )


def decide_equivalence(E: CarpetSpec, F: CarpetSpec) -> EquivalenceVerdict:
    """Run the sufficient-condition checklist and emit a verdict.

    A failed hypothesis gives Inconclusive, never a non-equivalence
    claim: the condition is sufficient only.
    """
    reasons = []

    def record(name, passed, detail):
        reasons.append(HypothesisRecord(name, passed, detail))
        return passed

    ok = record("equalHorizontalDivisions", E.n == F.n, f"n: {E.n} vs {F.n}")
    rep_e = check_conditions(E)
    rep_f = check_conditions(F)
    ok &= record(
        "crossIntersection",
        rep_e.cross_intersection and rep_f.cross_intersection,
        f"E: {rep_e.cross_intersection}, F: {rep_f.cross_intersection}",
    )
    sep_e = rep_e.top_isolated or rep_e.vertical_separation
    sep_f = rep_f.top_isolated or rep_f.vertical_separation
    ok &= record(
        "topIsolatedOrVerticallySeparated",
        sep_e and sep_f,
        f"E: topIsolated={rep_e.top_isolated} verticalSeparation={rep_e.vertical_separation}; "
        f"F: topIsolated={rep_f.top_isolated} verticalSeparation={rep_f.vertical_separation}",
    )
    prof_e = profile(E)
    prof_f = profile(F)
    ok &= record(
        "blockSizesMatch",
        Counter(prof_e.block_sizes) == Counter(prof_f.block_sizes),
        f"{list(prof_e.block_sizes)} vs {list(prof_f.block_sizes)}",
    )
    ok &= record(
        "pairSizesMatch",
        Counter(prof_e.pair_sizes) == Counter(prof_f.pair_sizes),
        f"{list(prof_e.pair_sizes)} vs {list(prof_f.pair_sizes)}",
    )
    if not ok:
        return EquivalenceVerdict("Inconclusive", tuple(reasons), None)
    certificate = build_letter_bijection(E, F)
    lipschitz = (
        E.is_fractal_square() and F.is_fractal_square() and E.n == F.n and E.m == F.m
    )
    status = "LipschitzEquivalent" if lipschitz else "HolderEquivalent"
    return EquivalenceVerdict(status, tuple(reasons), certificate)


def final_automaton(spec: CarpetSpec):
    """Final simplified automaton of a carpet, as a full transition table."""
    C = from_topology_automaton(build_topology_automaton(spec))
    return final_chain(C).final.induced_automaton()


def isometry_check(E: CarpetSpec, F: CarpetSpec, bij: LetterBijection, pairs):
    """Mismatches of surviving times between the two final automata.

    Each sampled pair (x, y) of E-words is compared with its letterwise
    image in F; the expected report is empty.
    """
    me = final_automaton(E)
    mf = final_automaton(F)
    mismatches = []
    for x, y in pairs:
        te = surviving_time(me, x, y)
        tf = surviving_time(mf, bij.apply_word(x), bij.apply_word(y))
        if te != tf:
            mismatches.append((x, y, te, tf))
    return mismatches
