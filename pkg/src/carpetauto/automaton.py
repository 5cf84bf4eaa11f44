"""Pair-alphabet automata: the generic engine plus the carpet builder.

States are ``ID``, ``EXIT``, or a nonzero offset vector (bx, by) with
components in {-1, 0, 1}.  The transition table maps (state, i, j) to a
state; missing entries mean EXIT.  Feeding a pair of infinite words
letter by letter yields an itinerary, and the surviving time is the last
step before the itinerary hits EXIT (infinity if it never does).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .words import PeriodicWord

ID = "Id"
EXIT = "Exit"

_OFFSET_NAMES = {
    (1, 0): "e1",
    (-1, 0): "-e1",
    (0, 1): "e2",
    (0, -1): "-e2",
    (1, 1): "e1+e2",
    (-1, -1): "-e1-e2",
    (1, -1): "e1-e2",
    (-1, 1): "-e1+e2",
}
_NAME_OFFSETS = {v: k for k, v in _OFFSET_NAMES.items()}


def neg(state):
    """Mirror state: offsets negate, Id and Exit are self-mirrored."""
    if state in (ID, EXIT):
        return state
    return (-state[0], -state[1])


def state_name(state) -> str:
    if state in (ID, EXIT):
        return state
    return _OFFSET_NAMES[state]


def state_from_name(name: str):
    if name in (ID, EXIT):
        return name
    try:
        return _NAME_OFFSETS[name]
    except KeyError:
        raise ValueError(f"unknown state name {name!r}") from None


class Infinite:
    """Singleton tag for an infinite surviving time."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    def __eq__(self, other):
        return isinstance(other, Infinite)

    def __hash__(self):
        return hash("Infinite")


INFINITE = Infinite()


def is_infinite(t) -> bool:
    return isinstance(t, Infinite)


@dataclass(frozen=True)
class SigmaAutomaton:
    """Deterministic automaton over the pair alphabet of {1..N}."""

    alphabet_size: int
    states: frozenset
    delta: dict = field(hash=False)

    def __post_init__(self):
        assert ID in self.states and EXIT in self.states
        for (s, i, j), t in self.delta.items():
            assert s != EXIT and s in self.states and t in self.states
            assert 1 <= i <= self.alphabet_size and 1 <= j <= self.alphabet_size
        for i in range(1, self.alphabet_size + 1):
            for j in range(1, self.alphabet_size + 1):
                got = self.delta.get((ID, i, j), EXIT)
                assert (got == ID) == (i == j), (
                    f"delta(Id,({i},{j})) must be Id exactly when i == j"
                )

    def step(self, state, i: int, j: int):
        if state == EXIT:
            return EXIT
        return self.delta.get((state, i, j), EXIT)

    def letters(self):
        return range(1, self.alphabet_size + 1)


def build_topology_automaton(spec, oracle=None) -> SigmaAutomaton:
    """Topology automaton of a carpet, built through its companion.

    From state with vector s on input (i, j) the joint descent moves to
    v = (n*s_x + d_j1 - d_i1, m*s_y + d_j2 - d_i2): stay at Id when v is
    zero, move to the offset v when it is a surviving unit offset, and
    exit otherwise.  States unreachable from Id are pruned.
    """
    from .geometry import build_oracle

    if oracle is None:
        oracle = build_oracle(spec.companion())
    N = len(spec.digits)
    delta = {}
    sources = [ID] + [b for b in oracle.survivors if b != (0, 0)]
    for s in sources:
        sx, sy = (0, 0) if s == ID else s
        for i, di in enumerate(spec.digits, start=1):
            for j, dj in enumerate(spec.digits, start=1):
                v = (spec.n * sx + dj[0] - di[0], spec.m * sy + dj[1] - di[1])
                if v == (0, 0):
                    assert s == ID and i == j, "zero offset off the diagonal"
                    delta[(s, i, j)] = ID
                elif -1 <= v[0] <= 1 and -1 <= v[1] <= 1 and v in oracle.survivors:
                    delta[(s, i, j)] = v
    return _pruned(N, delta)


def _pruned(N: int, delta: dict) -> SigmaAutomaton:
    """Keep only states reachable from Id."""
    reachable = {ID}
    frontier = [ID]
    while frontier:
        s = frontier.pop()
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                t = delta.get((s, i, j), EXIT)
                if t != EXIT and t not in reachable:
                    reachable.add(t)
                    frontier.append(t)
    kept = {k: v for k, v in delta.items() if k[0] in reachable and v in reachable}
    return SigmaAutomaton(N, frozenset(reachable | {EXIT}), kept)


def surviving_time(M: SigmaAutomaton, x: PeriodicWord, y: PeriodicWord):
    """T_M(x, y): the last step whose state is not Exit, or INFINITE.

    Once both words are inside their periodic parts the pair of inputs is
    periodic with period lcm(|per_x|, |per_y|), so if no exit occurs
    within one full sweep of (state, phase) combinations the itinerary
    repeats forever.
    """
    pre = max(len(x.preperiod), len(y.preperiod))
    cycle = math.lcm(len(x.period), len(y.period))
    bound = pre + cycle * len(M.states) + 1
    state = ID
    for k in range(1, bound + 1):
        state = M.step(state, x.letter(k), y.letter(k))
        if state == EXIT:
            return k - 1
    return INFINITE


def mirror_check(M: SigmaAutomaton) -> bool:
    """delta(S,(i,j)) == -delta(-S,(j,i)) over the whole table."""
    for s in M.states:
        if s == EXIT:
            continue
        if neg(s) not in M.states:
            return False
        for i in M.letters():
            for j in M.letters():
                if M.step(s, i, j) != neg(M.step(neg(s), j, i)):
                    return False
    return True


def check_feasibility(M: SigmaAutomaton, t0: int, triples):
    """Violations of min{T(x,y), T(x,z)} <= T(y,z) + t0 over the samples.

    Each (x, y, z) triple is checked in all three apex roles.  Infinite
    plus t0 counts as infinite.
    """
    violations = []
    cache = {}

    def t(a, b):
        key = (a, b) if (a.preperiod, a.period) <= (b.preperiod, b.period) else (b, a)
        if key not in cache:
            cache[key] = surviving_time(M, key[0], key[1])
        return cache[key]

    for x, y, z in triples:
        for apex, u, v in ((x, y, z), (y, x, z), (z, x, y)):
            lhs = _tmin(t(apex, u), t(apex, v))
            rhs = t(u, v)
            if is_infinite(rhs):
                continue
            if is_infinite(lhs) or lhs > rhs + t0:
                violations.append((apex, u, v, lhs, rhs))
    return violations


def _tmin(a, b):
    if is_infinite(a):
        return b
    if is_infinite(b):
        return a
    return min(a, b)


def random_word(rng, N: int, max_pre: int = 3, max_per: int = 3) -> PeriodicWord:
    pre = tuple(rng.randint(1, N) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randint(1, N) for _ in range(rng.randint(1, max_per)))
    return PeriodicWord(pre, per)


def to_dot(M: SigmaAutomaton, include_exit: bool = False) -> str:
    """Graphviz rendering with deterministic node and edge order."""
    def order_key(s):
        return (0, "") if s == ID else (2, "") if s == EXIT else (1, state_name(s))

    lines = ["digraph automaton {", "  rankdir=LR;", '  node [shape=circle];']
    for s in sorted(M.states, key=order_key):
        if s == EXIT and not include_exit:
            continue
        shape = ' shape=doublecircle' if s == ID else ""
        lines.append(f'  "{state_name(s)}" [label="{state_name(s)}"{shape}];')
    edges = {}
    for (s, i, j), t in sorted(M.delta.items(), key=lambda kv: (order_key(kv[0][0]), kv[0][1:])):
        if t == EXIT and not include_exit:
            continue
        edges.setdefault((state_name(s), state_name(t)), []).append(f"{i},{j}")
    for (src, dst), labels in sorted(edges.items()):
        lines.append(f'  "{src}" -> "{dst}" [label="{" | ".join(labels)}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(M: SigmaAutomaton) -> str:
    import json

    def order_key(s):
        return (0, "") if s == ID else (2, "") if s == EXIT else (1, state_name(s))

    states = [state_name(s) for s in sorted(M.states, key=order_key)]
    delta = {
        f"{state_name(s)}|{i},{j}": state_name(t)
        for (s, i, j), t in sorted(
            M.delta.items(), key=lambda kv: (order_key(kv[0][0]), kv[0][1:])
        )
    }
    return json.dumps({"N": M.alphabet_size, "states": states, "delta": delta})


def from_json(text: str) -> SigmaAutomaton:
    import json

    data = json.loads(text)
    states = frozenset(state_from_name(s) for s in data["states"]) | {ID, EXIT}
    delta = {}
    for key, target in data["delta"].items():
        sname, pair = key.split("|")
        i, j = (int(a) for a in pair.split(","))
        delta[(state_from_name(sname), i, j)] = state_from_name(target)
    return SigmaAutomaton(int(data["N"]), states, delta)
