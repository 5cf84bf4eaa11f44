"""Cross automata: four-relation encoding, axioms, and classification.

A cross automaton is a symmetric pair-alphabet automaton whose offset
states are only the four axis vectors.  It is fully determined by the
relations PH (enter e1), PV (enter e2), Pe1 (loop at e1) and Pe2 (loop
at e2); the mirrored halves follow by transposition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .automaton import EXIT, ID, SigmaAutomaton, neg
from .words import PeriodicWord

E1 = (1, 0)
E2 = (0, 1)
AXIS_STATES = (E1, (-1, 0), E2, (0, -1))


class CrossAutomatonError(ValueError):
    pass


class DiagonalStatePresent(CrossAutomatonError):
    """The source automaton reaches a diagonal offset state."""


def _as_pairs(pairs):
    return frozenset((int(i), int(j)) for i, j in pairs)


@dataclass(frozen=True)
class CrossAutomaton:
    alphabet_size: int
    PH: frozenset
    PV: frozenset
    Pe1: frozenset
    Pe2: frozenset

    def __post_init__(self):
        for name in ("PH", "PV", "Pe1", "Pe2"):
            object.__setattr__(self, name, _as_pairs(getattr(self, name)))
        N = self.alphabet_size
        for name in ("PH", "PV", "Pe1", "Pe2"):
            for i, j in getattr(self, name):
                if not (1 <= i <= N and 1 <= j <= N):
                    raise CrossAutomatonError(f"letter outside 1..{N} in {name}")
        for i, j in self.PH | self.PV:
            if i == j:
                raise CrossAutomatonError("reflexive pair in an entry relation")
        if self.PH & self.PV:
            raise CrossAutomatonError("PH and PV overlap")
        trans = {(j, i) for i, j in self.PH | self.PV}
        if trans & (self.PH | self.PV):
            raise CrossAutomatonError("entry relations overlap their transposes")

    def relations(self):
        return {"H": self.PH, "V": self.PV, "e1": self.Pe1, "e2": self.Pe2}

    def induced_automaton(self) -> SigmaAutomaton:
        """The full transition table over states {Id, ±e1, ±e2, Exit}."""
        delta = {}
        for i in range(1, self.alphabet_size + 1):
            delta[(ID, i, i)] = ID
        for i, j in self.PH:
            delta[(ID, i, j)] = E1
            delta[(ID, j, i)] = (-1, 0)
        for i, j in self.PV:
            delta[(ID, i, j)] = E2
            delta[(ID, j, i)] = (0, -1)
        for i, j in self.Pe1:
            delta[(E1, i, j)] = E1
            delta[((-1, 0), j, i)] = (-1, 0)
        for i, j in self.Pe2:
            delta[(E2, i, j)] = E2
            delta[((0, -1), j, i)] = (0, -1)
        states = frozenset({ID, EXIT, *AXIS_STATES})
        return SigmaAutomaton(self.alphabet_size, states, delta)

    def to_json(self) -> str:
        data = {
            "N": self.alphabet_size,
            "PH": sorted(list(p) for p in self.PH),
            "PV": sorted(list(p) for p in self.PV),
            "Pe1": sorted(list(p) for p in self.Pe1),
            "Pe2": sorted(list(p) for p in self.Pe2),
        }
        return json.dumps(data)


def cross_from_json(text: str) -> CrossAutomaton:
    data = json.loads(text)
    return CrossAutomaton(
        int(data["N"]),
        _as_pairs(data.get("PH", ())),
        _as_pairs(data.get("PV", ())),
        _as_pairs(data.get("Pe1", ())),
        _as_pairs(data.get("Pe2", ())),
    )


def from_topology_automaton(M: SigmaAutomaton) -> CrossAutomaton:
    """Extract the four relations; fails if diagonal states are reachable."""
    for s in M.states:
        if s not in (ID, EXIT) and s not in AXIS_STATES:
            raise DiagonalStatePresent(f"state {s} present: cross intersection fails")
    rels = {"PH": set(), "PV": set(), "Pe1": set(), "Pe2": set()}
    for (s, i, j), t in M.delta.items():
        if s == ID and t == E1:
            rels["PH"].add((i, j))
        elif s == ID and t == E2:
            rels["PV"].add((i, j))
        elif s == E1 and t == E1:
            rels["Pe1"].add((i, j))
        elif s == E2 and t == E2:
            rels["Pe2"].add((i, j))
    return CrossAutomaton(M.alphabet_size, *(frozenset(rels[k]) for k in ("PH", "PV", "Pe1", "Pe2")))


def check_uniqueness(C: CrossAutomaton):
    """Def-of-cross uniqueness: every relation is a partial matching."""
    problems = []
    for name, rel in C.relations().items():
        out = {}
        inc = {}
        for i, j in rel:
            if out.setdefault(i, j) != j:
                problems.append((name, "two successors", i))
            if inc.setdefault(j, i) != i:
                problems.append((name, "two predecessors", j))
    return problems


def decide_triple_coding_free(C: CrossAutomaton):
    """Search for distinct x, y, z with two infinite pairwise times.

    Two of the three pairs always share a word; by symmetry of the
    automaton take the shared word as x.  Track the three itineraries of
    (x,y), (x,z), (y,z) jointly over inputs (i, j, k).  Self-looping
    makes an offset state permanent until exit, so a violation exists iff
    some joint state with both shared-word components in loop states (and
    the third off Id) is reachable and has one input triple keeping both
    alive; repeating that triple forever finishes the witness.

    Returns (True, None) when the condition holds, else (False, witness)
    with a witness triple of eventually-constant words.
    """
    M = C.induced_automaton()
    N = C.alphabet_size
    start = (ID, ID, ID)
    seen = {start: None}  # joint state -> (previous joint state, input triple)
    frontier = [start]

    def step3(js, i, j, k):
        s1, s2, s3 = js
        t1 = M.step(s1, i, j)
        t2 = M.step(s2, i, k)
        t3 = M.step(s3, j, k)
        if t1 == EXIT or t2 == EXIT:
            return None
        return (t1, t2, t3)

    while frontier:
        js = frontier.pop(0)
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                for k in range(1, N + 1):
                    nxt = step3(js, i, j, k)
                    if nxt is None or nxt in seen:
                        continue
                    seen[nxt] = (js, (i, j, k))
                    s1, s2, s3 = nxt
                    if s1 != ID and s2 != ID and s3 != ID:
                        loop = _sustaining_input(M, nxt, N)
                        if loop is not None:
                            return False, _witness(seen, nxt, loop)
                    frontier.append(nxt)
    return True, None


def _sustaining_input(M, js, N):
    s1, s2, s3 = js
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for k in range(1, N + 1):
                if (
                    M.step(s1, i, j) == s1
                    and M.step(s2, i, k) == s2
                ):
                    return (i, j, k)
    return None


def _witness(seen, js, loop):
    path = []
    cur = js
    while seen[cur] is not None:
        prev, trip = seen[cur]
        path.append(trip)
        cur = prev
    path.reverse()
    xs = tuple(t[0] for t in path)
    ys = tuple(t[1] for t in path)
    zs = tuple(t[2] for t in path)
    return (
        PeriodicWord(xs, (loop[0],)),
        PeriodicWord(ys, (loop[1],)),
        PeriodicWord(zs, (loop[2],)),
    )


def validate(C: CrossAutomaton):
    """All Def-of-cross axioms; raises CrossAutomatonError on failure."""
    problems = check_uniqueness(C)
    if problems:
        raise CrossAutomatonError(f"uniqueness violated: {problems}")
    ok, witness = decide_triple_coding_free(C)
    if not ok:
        raise CrossAutomatonError(f"triple coding present, witness {witness}")


@dataclass(frozen=True)
class RelationGraph:
    letters: tuple[int, ...]
    edges: frozenset

    def outdegree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if i == v)

    def indegree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if j == v)

    def is_maximal(self, v: int) -> bool:
        return self.outdegree(v) == 0

    def is_minimal(self, v: int) -> bool:
        return self.indegree(v) == 0

    def is_isolated(self, v: int) -> bool:
        return self.is_maximal(v) and self.is_minimal(v)

    def has_cycle(self) -> bool:
        succ = {}
        for i, j in self.edges:
            succ.setdefault(i, []).append(j)
        color = {}

        def visit(v):
            color[v] = 1
            for w in succ.get(v, ()):
                c = color.get(w, 0)
                if c == 1 or (c == 0 and visit(w)):
                    return True
            color[v] = 2
            return False

        return any(color.get(v, 0) == 0 and visit(v) for v in self.letters)


def relation_graph(C: CrossAutomaton, which: str) -> RelationGraph:
    rel = C.relations()[which]
    return RelationGraph(tuple(range(1, C.alphabet_size + 1)), frozenset(rel))


@dataclass(frozen=True)
class Classification:
    kind: str  # Class0 | Class1 | Class2 | Unclassified
    top: int | None = None
    bottom: int | None = None
    reason: str | None = None


def classify(C: CrossAutomaton, origin=None) -> Classification:
    """Class 0 / 1 / 2 per the abstract axioms; Class 1 needs provenance.

    ``origin`` is the carpet the automaton came from; without it the best
    possible answer is Class 2.
    """
    if not C.PV:
        return Classification("Class0")
    if len(C.Pe2) != 1:
        return Classification("Unclassified", reason="Pe2 is not a singleton")
    ((gamma, lam),) = C.Pe2
    if gamma == lam:
        return Classification("Unclassified", reason="top and bottom vertices coincide")
    for which in ("H", "V", "e1"):
        if not relation_graph(C, which).is_isolated(gamma):
            return Classification(
                "Unclassified", top=gamma, bottom=lam,
                reason=f"top vertex not isolated in {which}",
            )
    M = C.induced_automaton()
    for t1 in range(1, C.alphabet_size + 1):
        if t1 == lam:
            continue
        for t2 in range(1, C.alphabet_size + 1):
            if M.step(M.step(ID, lam, t1), lam, t2) != EXIT:
                return Classification(
                    "Unclassified", top=gamma, bottom=lam,
                    reason=f"(lam lam, {t1}{t2}) does not exit in two steps",
                )
            if M.step(M.step(ID, t1, lam), t2, lam) != EXIT:
                return Classification(
                    "Unclassified", top=gamma, bottom=lam,
                    reason=f"({t1}{t2}, lam lam) does not exit in two steps",
                )
    if relation_graph(C, "V").has_cycle():
        return Classification(
            "Unclassified", top=gamma, bottom=lam, reason="PV graph has a cycle"
        )
    if origin is not None:
        from .automaton import build_topology_automaton
        from .carpet import check_conditions

        rep = check_conditions(origin)
        if (
            rep.top_isolated
            and rep.cross_intersection
            and not rep.vertical_separation
            and from_topology_automaton(build_topology_automaton(origin)) == C
        ):
            return Classification("Class1", top=gamma, bottom=lam)
    return Classification("Class2", top=gamma, bottom=lam)


def transpose_mirror_check(C: CrossAutomaton) -> bool:
    """The induced table is symmetric under state negation + transposition."""
    M = C.induced_automaton()
    for s in M.states:
        if s == EXIT:
            continue
        for i in M.letters():
            for j in M.letters():
                if M.step(s, i, j) != neg(M.step(neg(s), j, i)):
                    return False
    return True
