"""One-step and final simplification of Class-2 cross automata.

A step deletes one vertical entry edge (tau, kappa) whose target kappa
has no outgoing vertical edge; the other three relations are untouched.
Iterating empties PV and ends in a Class-0 automaton.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cross import Classification, CrossAutomaton, classify, validate


class NotClass2(ValueError):
    pass


@dataclass(frozen=True)
class SimplificationStep:
    before: CrossAutomaton
    after: CrossAutomaton
    deleted: tuple[int, int]  # (tau, kappa)
    top_bottom: tuple[int, int]  # (gamma, lambda)

    @property
    def g_supported(self) -> bool:
        """The universal-map context needs kappa distinct from gamma and
        lambda; steps deleting an edge into either are still legal but the
        symbolic bijection is not defined for them."""
        tau, kappa = self.deleted
        gamma, lam = self.top_bottom
        return kappa not in (gamma, lam) and tau != gamma

    def to_dict(self):
        import json

        return {
            "deleted": list(self.deleted),
            "topBottom": list(self.top_bottom),
            "before": json.loads(self.before.to_json()),
            "after": json.loads(self.after.to_json()),
            "gSupported": self.g_supported,
        }


def one_step(C: CrossAutomaton, cls: Classification | None = None) -> SimplificationStep:
    """Delete the canonical deletable vertical edge.

    Among edges (tau, kappa) with kappa V-maximal, the smallest kappa and
    then the smallest tau is picked, so chains are reproducible.
    """
    if cls is None:
        cls = classify(C)
    if cls.kind not in ("Class1", "Class2"):
        raise NotClass2(f"automaton is {cls.kind}, not Class 2")
    candidates = sorted(
        (kappa, tau)
        for tau, kappa in C.PV
        if not any(i == kappa for i, _ in C.PV)
    )
    assert candidates, "acyclic nonempty PV must have a V-maximal edge target"
    kappa, tau = candidates[0]
    after = CrossAutomaton(
        C.alphabet_size,
        C.PH,
        C.PV - {(tau, kappa)},
        C.Pe1,
        C.Pe2,
    )
    after_cls = classify(after)
    expected = "Class0" if not after.PV else "Class2"
    assert after_cls.kind == expected, (
        f"one-step result is {after_cls.kind} ({after_cls.reason}), expected {expected}"
    )
    assert not any(i == kappa or j == kappa for i, j in after.PV), (
        "deleted target must be V-isolated afterwards"
    )
    return SimplificationStep(C, after, (tau, kappa), (cls.top, cls.bottom))


@dataclass(frozen=True)
class SimplificationChain:
    stages: tuple[CrossAutomaton, ...]
    steps: tuple[SimplificationStep, ...]

    @property
    def final(self) -> CrossAutomaton:
        return self.stages[-1]

    def to_json(self) -> str:
        import json

        return json.dumps([s.to_dict() for s in self.steps])


def final_chain(C: CrossAutomaton, validate_stages: bool = True) -> SimplificationChain:
    """Iterate one_step until PV is empty; Class-0 input gives an empty chain."""
    cls = classify(C)
    if cls.kind == "Class0":
        return SimplificationChain((C,), ())
    stages = [C]
    steps = []
    cur, cur_cls = C, cls
    while cur.PV:
        step = one_step(cur, cur_cls)
        if validate_stages:
            validate(step.after)
        steps.append(step)
        stages.append(step.after)
        cur = step.after
        cur_cls = classify(cur)
    assert len(steps) == len(C.PV)
    return SimplificationChain(tuple(stages), tuple(steps))
