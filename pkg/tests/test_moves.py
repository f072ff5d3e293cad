"""Isotopy move engine: applicability rules, exact inverses, enumeration."""

from __future__ import annotations

import random

import pytest

from lensgrid.core import LensSpace, grid_from_rows, parse, serialize, translate, validate
from lensgrid.corpus import random_diagram
from lensgrid.equivalence import canonical_form
from lensgrid.homology import homology_multiset
from lensgrid.moves import (
    CommuteCols,
    CommuteRows,
    Corner,
    Destabilize,
    InapplicableMove,
    Stabilize,
    TranslateH,
    TranslateV,
    apply_move,
    apply_moves,
    commute_cols,
    commute_rows,
    destabilize,
    invert_move,
    neighbors,
    search_edges,
    stabilize,
)

LENSES = [LensSpace(2, 1), LensSpace(3, 1), LensSpace(5, 2), LensSpace(7, 2), LensSpace(8, 3)]


def test_commute_rows_disjoint_levels():
    G = grid_from_rows(LensSpace(2, 1), ["XO..", "..OX"])
    H = commute_rows(G, 0)
    assert serialize(H).endswith("..OX\nXO..\n")
    # involution
    assert commute_rows(H, 0) == G


def test_commute_rows_interleaving_rejected():
    G = grid_from_rows(LensSpace(2, 1), ["X.O.", ".X.O"])
    with pytest.raises(InapplicableMove, match="interleav"):
        commute_rows(G, 0)


def test_commute_rows_shared_level_rejected():
    # X above O at the same rectangle column
    G = grid_from_rows(LensSpace(2, 1), ["XO..", "O..X"])
    with pytest.raises(InapplicableMove, match="shared"):
        commute_rows(G, 0)


def test_commute_rows_range_checked():
    G = grid_from_rows(LensSpace(2, 1), ["XO..", "..OX"])
    with pytest.raises(ValueError):
        commute_rows(G, 1)
    with pytest.raises(ValueError):
        commute_rows(G, -1)


def test_commute_cols_disjoint_levels():
    G = grid_from_rows(LensSpace(2, 1), ["X..O", "O..X"])
    H = commute_cols(G, 0)
    assert serialize(H).endswith(".XO.\n.OX.\n")
    assert commute_cols(H, 0) == G


def test_commute_cols_shared_level_rejected():
    # walking both annuli gives column-cell levels {0,3} twice
    G = grid_from_rows(LensSpace(2, 1), ["XO..", "..OX"])
    with pytest.raises(InapplicableMove, match="shared"):
        commute_cols(G, 0)


def test_stabilize_grows_grid_and_destabilize_undoes():
    E1 = parse("lens 2 1\ngrid 1\nXO\n")
    H = stabilize(E1, 0, Corner.NW)
    assert H.n == 2
    assert validate(H).ok
    assert serialize(H).endswith("OX..\nX..O\n")
    back = destabilize(H, 0, 0)
    assert back == E1


def test_stabilize_all_corners_roundtrip():
    rng = random.Random(41)
    for ls in LENSES:
        for n in (1, 2, 3):
            G = random_diagram(ls, n, rng)
            for m in range(len(G.markings)):
                for corner in Corner:
                    mv = Stabilize(m, corner)
                    H = apply_move(G, mv)
                    assert validate(H).ok
                    assert H.n == n + 1
                    inv = invert_move(G, mv)
                    assert isinstance(inv, Destabilize)
                    assert apply_move(H, inv) == G


def test_destabilize_requires_three_markings():
    # all four square cells marked
    G = grid_from_rows(LensSpace(1, 0), ["XO", "OX"])
    with pytest.raises(InapplicableMove, match="3 markings"):
        destabilize(G, 0, 0)


def test_destabilize_range_and_grid_one():
    E1 = parse("lens 2 1\ngrid 1\nXO\n")
    with pytest.raises(InapplicableMove, match="grid number 1"):
        destabilize(E1, 0, 0)
    G = grid_from_rows(LensSpace(2, 1), ["XO..", "..OX"])
    with pytest.raises(ValueError):
        destabilize(G, 1, 0)  # square would leave the bottom row
    with pytest.raises(ValueError):
        destabilize(G, 0, 1)  # square straddles two boxes


def test_every_neighbor_move_inverts_exactly():
    rng = random.Random(7)
    for ls in LENSES:
        for n in (1, 2):
            G = random_diagram(ls, n, rng)
            for mv, child in neighbors(G, n_max=n + 1):
                assert validate(child).ok
                inv = invert_move(G, mv)
                assert apply_move(child, inv) == G


def test_moves_preserve_homology_and_validity():
    rng = random.Random(13)
    for ls in LENSES:
        for n in (1, 2, 3):
            G = random_diagram(ls, n, rng)
            hom = homology_multiset(G)
            for mv, child in neighbors(G, n_max=n + 1):
                assert homology_multiset(child) == hom, str(mv)


def test_neighbors_e1_enumeration():
    E1 = parse("lens 2 1\ngrid 1\nXO\n")
    small = neighbors(E1, n_max=1)
    # no commutation or square fits in a 1-row grid; only translations
    assert [str(m) for m, _ in small] == [
        "translate_h 1",
        "translate_h -1",
        "translate_v 1",
        "translate_v -1",
    ]
    grown = neighbors(E1, n_max=2)
    stabs = [m for m, _ in grown if isinstance(m, Stabilize)]
    assert len(stabs) == 8  # 2 markings x 4 corners
    assert len(grown) == 12


def test_neighbors_deterministic():
    rng = random.Random(3)
    G = random_diagram(LensSpace(5, 2), 2, rng)
    a = [str(m) for m, _ in neighbors(G, n_max=3)]
    b = [str(m) for m, _ in neighbors(G, n_max=3)]
    assert a == b


def test_search_edges_replay_exactly():
    rng = random.Random(19)
    for ls in LENSES:
        for n in (1, 2):
            G = random_diagram(ls, n, rng)
            for prims, child in search_edges(G, n_max=n + 1):
                assert apply_moves(G, prims) == child
                assert validate(child).ok


def test_search_edges_cover_translated_neighbors():
    # the class graph explored from a canonical representative must see
    # every class reachable by one move from any translate
    rng = random.Random(29)
    for ls in [LensSpace(2, 1), LensSpace(3, 1), LensSpace(5, 2)]:
        for n in (1, 2):
            G = random_diagram(ls, n, rng)
            reachable = {canonical_form(child) for _, child in search_edges(G, n_max=n + 1)}
            reachable.add(canonical_form(G))  # translations are class self-loops
            for dr in range(n):
                for dx in range(G.width):
                    T = translate(G, dr, dx)
                    for _, child in neighbors(T, n_max=n + 1):
                        assert canonical_form(child) in reachable


def test_translation_moves_compose_to_identity():
    rng = random.Random(53)
    G = random_diagram(LensSpace(7, 2), 2, rng)
    path = [TranslateH(3), TranslateV(1), TranslateH(-3), TranslateV(-1)]
    assert apply_moves(G, path) == G


def test_commute_wrap_via_translation():
    # the wrapping row pair (n-1, 0) is reached by translating down first;
    # the composite inverts move by move
    rng = random.Random(61)
    hits = 0
    for _ in range(50):
        G = random_diagram(LensSpace(3, 1), 3, rng)
        try:
            moved = apply_moves(G, [TranslateV(1), CommuteRows(0)])
        except InapplicableMove:
            continue
        hits += 1
        assert apply_moves(moved, [CommuteRows(0), TranslateV(-1)]) == G
    assert hits > 0
