"""Grid representation: coordinates, components, translation, text format."""

from __future__ import annotations

import math
import random

import pytest

from lensgrid.core import (
    Cell,
    GridDiagram,
    GridFormatError,
    LensSpace,
    MarkType,
    col_cell_to_rect,
    grid_from_rows,
    parse,
    rect_to_col_cell,
    render_ascii,
    serialize,
    trace_components,
    translate,
    validate,
)
from lensgrid.corpus import random_diagram

LENSES = [LensSpace(2, 1), LensSpace(3, 1), LensSpace(4, 1), LensSpace(5, 2), LensSpace(7, 2), LensSpace(8, 3)]


def test_lens_space_validation():
    assert LensSpace(1, 0).is_sphere
    assert LensSpace(5, 2).q_inverse() == 3  # 2*3 = 6 = 1 mod 5
    with pytest.raises(ValueError):
        LensSpace(4, 2)  # gcd 2
    with pytest.raises(ValueError):
        LensSpace(5, 5)  # q out of range
    with pytest.raises(ValueError):
        LensSpace(0, 1)
    for ls in LENSES:
        assert math.gcd(ls.p, ls.q) == 1
        assert (ls.q * ls.q_inverse()) % ls.p == 1


def test_strip_sequence_l52():
    # hand-traced: walking down annulus 0 of L(5,2) with n=1 visits the
    # boxes in the order 0, 2, 4, 1, 3
    ls = LensSpace(5, 2)
    boxes = [col_cell_to_rect(ls, 1, 0, k).x for k in range(5)]
    assert boxes == [0, 2, 4, 1, 3]


def test_col_cell_bijective_small():
    for p in range(1, 10):
        for q in range(p):
            if math.gcd(p, q) != 1:
                continue
            ls = LensSpace(p, q)
            for n in range(1, 5):
                seen = set()
                for j in range(n):
                    for k in range(n * p):
                        cell = col_cell_to_rect(ls, n, j, k)
                        assert cell.x % n == j
                        assert rect_to_col_cell(ls, n, cell) == (j, k)
                        seen.add(cell)
                assert len(seen) == n * n * p


def test_validate_reports_violations():
    ls = LensSpace(3, 1)
    G = GridDiagram(ls, 1, ((Cell(0, 0), MarkType.X), (Cell(0, 1), MarkType.X)))
    report = validate(G)
    assert not report.ok
    assert any("row 0" in v for v in report.violations)
    assert any("annulus" in v for v in report.violations)


def test_duplicate_cell_rejected():
    ls = LensSpace(2, 1)
    with pytest.raises(ValueError):
        GridDiagram(ls, 1, ((Cell(0, 0), MarkType.X), (Cell(0, 0), MarkType.O)))


def test_cell_out_of_range_rejected():
    ls = LensSpace(2, 1)
    with pytest.raises(ValueError):
        GridDiagram(ls, 1, ((Cell(0, 2), MarkType.X), (Cell(0, 1), MarkType.O)))
    with pytest.raises(ValueError):
        GridDiagram(ls, 1, ((Cell(1, 0), MarkType.X), (Cell(0, 1), MarkType.O)))


def test_trace_components_knot_and_link():
    # E1: single unknotted component
    E1 = parse("lens 2 1\ngrid 1\nXO\n")
    comps = trace_components(E1)
    assert len(comps) == 1
    assert len(comps[0].marking_indices) == 2

    # the 2x2 sphere grid closes into one circle through all four markings
    G = grid_from_rows(LensSpace(1, 0), ["XO", "OX"])
    assert len(trace_components(G)) == 1

    # two split circles: disjoint row/column supports
    H = grid_from_rows(LensSpace(1, 0), ["XO..", "OX..", "..XO", "..OX"])
    assert len(trace_components(H)) == 2


def test_translate_identity_and_periods():
    rng = random.Random(3)
    for ls in LENSES:
        for n in (1, 2, 3):
            G = random_diagram(ls, n, rng)
            assert translate(G, 0, 0) == G
            assert translate(G, 0, ls.p * n) == G
            # full vertical wrap shifts horizontally by q*n per pass
            assert translate(G, n, 0) == translate(G, 0, ls.q * n)
            # group law
            dr1, dx1, dr2, dx2 = (rng.randrange(6) for _ in range(4))
            two_step = translate(translate(G, dr1, dx1), dr2, dx2)
            assert two_step == translate(G, dr1 + dr2, dx1 + dx2)
            # vertical then horizontal equals one combined translation
            assert translate(translate(G, dr1, 0), 0, dx1) == translate(G, dr1, dx1)


def test_translate_preserves_validity_and_components():
    rng = random.Random(9)
    for ls in LENSES:
        G = random_diagram(ls, 3, rng)
        n_comp = len(trace_components(G))
        for dr, dx in [(1, 0), (0, 1), (2, 5), (ls.p, 3)]:
            H = translate(G, dr, dx)
            assert validate(H).ok
            assert len(trace_components(H)) == n_comp


def test_parse_serialize_round_trip():
    rng = random.Random(17)
    for ls in LENSES:
        for n in (1, 2, 4):
            G = random_diagram(ls, n, rng)
            assert parse(serialize(G)) == G


def test_parse_skips_comments_and_blank_lines():
    text = "# a comment\n\nlens 5 2\n\ngrid 1\n# body next\nXO...\n\n"
    G = parse(text)
    assert G.lens == LensSpace(5, 2)
    assert G.n == 1


@pytest.mark.parametrize(
    "text",
    [
        "grid 1\nXO\n",  # missing lens header
        "lens 2 1\nXO\n",  # missing grid header
        "lens 2 1\ngrid 1\nX?\n",  # bad character
        "lens 2 1\ngrid 1\nXO\nXO\n",  # too many rows
        "lens 2 1\ngrid 2\nXO\n",  # too few rows
        "lens 2 1\ngrid 1\nXOX\n",  # wrong width
        "lens 2 x\ngrid 1\nXO\n",  # non-integer field
        "lens 4 2\ngrid 1\nXO..\n",  # invalid lens
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(GridFormatError):
        parse(text)


def test_serialize_matches_hand_layout():
    E3 = parse("lens 5 2\ngrid 1\nXO...\n")
    assert serialize(E3) == "lens 5 2\ngrid 1\nXO...\n"
    G = grid_from_rows(LensSpace(2, 1), ["X.O.", ".O.X"])
    assert serialize(G).endswith("X.O.\n.O.X\n")


def test_render_ascii_smoke():
    for text in ["lens 2 1\ngrid 1\nXO\n", "lens 5 2\ngrid 1\nXO...\n"]:
        G = parse(text)
        art = render_ascii(G)
        assert "X" in art and "O" in art
        plain_lines = art.splitlines()
        assert len(plain_lines) >= G.n
    colored = render_ascii(parse("lens 2 1\ngrid 1\nXO\n"), color=True)
    assert "\x1b[" in colored


def test_render_marks_every_marking():
    rng = random.Random(31)
    G = random_diagram(LensSpace(3, 1), 2, rng)
    art = render_ascii(G)
    assert art.count("X") == 2
    assert art.count("O") == 2
