import json
from fractions import Fraction

import pytest

from carpetauto.carpet import (
    CarpetError,
    CarpetSpec,
    check_conditions,
    cylinder_adjacency,
    digit_letter,
    h_blocks,
    parse_carpet,
    profile,
)

from conftest import SQUARE_TOP_5, SQUARE_VSEP_5, TOP_ISOLATED_11, VSEP_11


def test_digits_are_canonically_ordered():
    spec = CarpetSpec(3, 3, ((1, 2), (0, 0), (2, 0)))
    assert spec.digits == ((0, 0), (2, 0), (1, 2))
    assert digit_letter(spec, (2, 0)) == 2


def test_validation_errors():
    with pytest.raises(CarpetError):
        CarpetSpec(1, 3, ((0, 0),))
    with pytest.raises(CarpetError):
        CarpetSpec(3, 3, ())
    with pytest.raises(CarpetError):
        CarpetSpec(3, 3, ((0, 0), (0, 0)))
    with pytest.raises(CarpetError):
        CarpetSpec(3, 3, ((3, 0),))
    with pytest.raises(CarpetError):
        CarpetSpec(2, 2, ((0, 0),), hratios=(Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(CarpetError):
        CarpetSpec(2, 2, ((0, 0),), hratios=(Fraction(1, 2),))


def test_companion_drops_ratios():
    spec = CarpetSpec(
        2, 2, ((0, 0), (1, 1)),
        hratios=(Fraction(1, 3), Fraction(2, 3)),
    )
    assert not spec.is_uniform()
    comp = spec.companion()
    assert comp.is_uniform()
    assert comp.digits == spec.digits
    assert spec.horizontal_ratios() == (Fraction(1, 3), Fraction(2, 3))
    assert comp.horizontal_ratios() == (Fraction(1, 2), Fraction(1, 2))


def test_fractal_square_flags():
    assert SQUARE_TOP_5.is_fractal_square()
    assert not VSEP_11.is_fractal_square()
    assert VSEP_11.is_uniform()


def test_grid_round_trip():
    grid = "..#\n#..\n#.#"
    spec = parse_carpet(grid)
    assert spec.to_grid() == grid
    assert parse_carpet(spec.to_json()) == spec


def test_json_ratios_round_trip():
    spec = CarpetSpec(
        2, 2, ((0, 0), (1, 1)),
        hratios=(Fraction(1, 3), Fraction(2, 3)),
        vratios=(Fraction(1, 4), Fraction(3, 4)),
    )
    again = parse_carpet(spec.to_json())
    assert again == spec


def test_parse_grid_errors():
    with pytest.raises(CarpetError):
        parse_carpet("#.\n#")
    with pytest.raises(CarpetError):
        parse_carpet("#x#")
    with pytest.raises(CarpetError):
        parse_carpet("{not json")


def test_adjacency_of_plus_shape():
    spec = parse_carpet(".#.\n###\n.#.")
    pairs = cylinder_adjacency(spec)
    center = digit_letter(spec, (1, 1))
    # the center touches all four arms; arms touch only the center
    assert len(pairs) == 4
    assert all(center in p for p in pairs)


def test_conditions_on_fixtures():
    rep = check_conditions(SQUARE_TOP_5)
    assert rep.top_isolated and rep.cross_intersection
    assert not rep.vertical_separation
    assert rep.top_letter == digit_letter(SQUARE_TOP_5, (1, 2))

    rep = check_conditions(SQUARE_VSEP_5)
    assert rep.vertical_separation and rep.cross_intersection

    rep = check_conditions(TOP_ISOLATED_11)
    assert rep.top_isolated and not rep.vertical_separation

    rep = check_conditions(VSEP_11)
    assert rep.vertical_separation and not rep.top_isolated


def test_corner_contact_breaks_cross_intersection():
    spec = parse_carpet("#.#\n###\n#.#")
    assert not check_conditions(spec).cross_intersection


def test_h_blocks_kinds_and_sizes():
    blocks = h_blocks(TOP_ISOLATED_11)
    by_row = {}
    for b in blocks:
        by_row.setdefault(b.row, []).append(b)
    assert [b.kind for b in by_row[0]] == ["Full"]
    assert sorted(b.kind for b in by_row[1]) == ["Left", "Right"]
    assert [b.size for b in by_row[2]] == [2]
    assert by_row[3][0].kind == "Interior"
    assert by_row[4][0].size == 1


def test_block_letters_follow_columns():
    (block,) = [b for b in h_blocks(TOP_ISOLATED_11) if b.kind == "Full"]
    assert block.letters == (1, 2, 3, 4, 5)
    assert block.columns == (0, 1, 2, 3, 4)


def test_profiles_of_equivalent_fixtures_match():
    pe = profile(TOP_ISOLATED_11)
    pf = profile(VSEP_11)
    assert pe.block_sizes == pf.block_sizes == (1, 1, 1, 1, 2, 5)
    assert pe.pair_sizes == pf.pair_sizes == ((1, 1),)
    assert pe.fiber != pf.fiber  # fibers may differ, only blocks must match


def test_profile_of_small_squares():
    for spec in (SQUARE_TOP_5, SQUARE_VSEP_5):
        p = profile(spec)
        assert p.block_sizes == (1, 1, 3)
        assert p.pair_sizes == ()


def test_profile_json_shape():
    d = profile(SQUARE_TOP_5).to_dict()
    assert json.dumps(d)
    assert set(d) == {"blockSizes", "pairSizes", "fiber"}
