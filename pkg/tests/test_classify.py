import json
import random

import pytest

from carpetauto.automaton import random_word
from carpetauto.carpet import CarpetSpec, parse_carpet
from carpetauto.classify import (
    build_letter_bijection,
    decide_equivalence,
    final_automaton,
    isometry_check,
)

from conftest import SQUARE_TOP_5, SQUARE_VSEP_5, TOP_ISOLATED_11, VSEP_11


def test_bijection_between_the_square_fixtures():
    bij = build_letter_bijection(SQUARE_VSEP_5, SQUARE_TOP_5)
    assert sorted(bij.mapping) == [1, 2, 3, 4, 5]
    assert sorted(bij.mapping.values()) == [1, 2, 3, 4, 5]
    # the full rows map to each other letterwise
    assert [bij(k) for k in (2, 3, 4)] == [1, 2, 3]


def test_bijection_word_images():
    bij = build_letter_bijection(SQUARE_VSEP_5, SQUARE_TOP_5)
    from carpetauto.words import parse_word

    w = parse_word("2.3(4)")
    assert bij.apply_word(w) == parse_word("1.2(3)")


def test_bijection_dict_is_serializable():
    bij = build_letter_bijection(TOP_ISOLATED_11, VSEP_11)
    d = bij.to_dict()
    assert json.dumps(d)
    assert len(d["map"]) == 11


def test_bijection_rejects_mismatched_blocks():
    small = parse_carpet("#..\n...\n##.")
    with pytest.raises(ValueError):
        build_letter_bijection(SQUARE_TOP_5, small)


def test_holder_equivalence_of_reconstruction_pair():
    verdict = decide_equivalence(TOP_ISOLATED_11, VSEP_11)
    assert verdict.status == "HolderEquivalent"
    assert verdict.certificate is not None
    assert all(r.passed for r in verdict.reasons)


def test_lipschitz_equivalence_of_square_pair():
    verdict = decide_equivalence(SQUARE_VSEP_5, SQUARE_TOP_5)
    assert verdict.status == "LipschitzEquivalent"
    assert verdict.certificate is not None


def test_reflexive_equivalence_is_lipschitz():
    verdict = decide_equivalence(SQUARE_TOP_5, SQUARE_TOP_5)
    assert verdict.status == "LipschitzEquivalent"


def test_inconclusive_on_different_divisions():
    other = parse_carpet("##\n.#")
    verdict = decide_equivalence(SQUARE_TOP_5, other)
    assert verdict.status == "Inconclusive"
    failed = [r.name for r in verdict.reasons if not r.passed]
    assert "equalHorizontalDivisions" in failed
    assert verdict.certificate is None


def test_inconclusive_on_profile_mismatch():
    other = CarpetSpec(3, 3, ((0, 0), (1, 0), (0, 1), (1, 2)))
    verdict = decide_equivalence(SQUARE_TOP_5, other)
    assert verdict.status == "Inconclusive"
    failed = {r.name for r in verdict.reasons if not r.passed}
    assert "blockSizesMatch" in failed


def test_inconclusive_never_claims_nonequivalence():
    verdict = decide_equivalence(SQUARE_TOP_5, parse_carpet("##\n.#"))
    data = json.loads(verdict.to_json())
    assert data["status"] == "Inconclusive"
    assert data["certificate"] is None
    assert {r["name"] for r in data["hypotheses"]}


def test_final_automata_are_isometric_under_the_bijection():
    bij = build_letter_bijection(SQUARE_VSEP_5, SQUARE_TOP_5)
    rng = random.Random(41)
    pairs = [(random_word(rng, 5), random_word(rng, 5)) for _ in range(150)]
    assert isometry_check(SQUARE_VSEP_5, SQUARE_TOP_5, bij, pairs) == []


def test_final_automata_of_holder_pair_are_isometric():
    bij = build_letter_bijection(TOP_ISOLATED_11, VSEP_11)
    rng = random.Random(43)
    pairs = [(random_word(rng, 11), random_word(rng, 11)) for _ in range(100)]
    assert isometry_check(TOP_ISOLATED_11, VSEP_11, bij, pairs) == []


def test_final_automaton_has_no_vertical_entries():
    from carpetauto.automaton import ID

    M = final_automaton(SQUARE_TOP_5)
    for i in M.letters():
        for j in M.letters():
            assert M.step(ID, i, j) not in ((0, 1), (0, -1))
