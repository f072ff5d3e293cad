"""Random and exhaustive diagram generation for tests and tabulation."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, List, Sequence

from .core import Cell, GridDiagram, LensSpace, MarkType
from .moves import MoveKind, InapplicableMove, apply_move, neighbors


def random_diagram(ls: LensSpace, n: int, rng: random.Random) -> GridDiagram:
    """Uniform over valid diagrams: a permutation pairing row i's X column
    annulus, another for O, independent box choices, resampled on the rare
    X/O cell collision."""
    if ls.p * n < 2:
        # a 1x1 sphere grid has one cell; X and O cannot both fit
        raise ValueError("no valid diagrams for this grid size")
    while True:
        x_ann = list(range(n))
        o_ann = list(range(n))
        rng.shuffle(x_ann)
        rng.shuffle(o_ann)
        markings: List = []
        ok = True
        for r in range(n):
            bx = rng.randrange(ls.p)
            bo = rng.randrange(ls.p)
            cx = Cell(r, bx * n + x_ann[r])
            co = Cell(r, bo * n + o_ann[r])
            if cx == co:
                ok = False
                break
            markings.append((cx, MarkType.X))
            markings.append((co, MarkType.O))
        if ok:
            return GridDiagram(ls, n, tuple(markings))


def random_move_sequence(
    G: GridDiagram, length: int, rng: random.Random, n_max: int
) -> tuple[GridDiagram, List[MoveKind]]:
    """Applies `length` moves drawn uniformly from the applicable ones."""
    path: List[MoveKind] = []
    cur = G
    for _ in range(length):
        options = [mv for mv, _ in neighbors(cur, n_max)]
        while options:
            mv = options.pop(rng.randrange(len(options)))
            try:
                cur = apply_move(cur, mv)
            except InapplicableMove:
                continue
            path.append(mv)
            break
        else:
            break
    return cur, path


def enumerate_diagrams(ls: LensSpace, n: int) -> Iterator[GridDiagram]:
    """All valid diagrams with grid number n, in a fixed deterministic order."""
    annuli = range(n)
    boxes = range(ls.p)
    for x_ann in itertools.permutations(annuli):
        for o_ann in itertools.permutations(annuli):
            cols = [(x_ann[r], o_ann[r]) for r in range(n)]
            for x_boxes in itertools.product(boxes, repeat=n):
                for o_boxes in itertools.product(boxes, repeat=n):
                    markings = []
                    ok = True
                    for r in range(n):
                        cx = Cell(r, x_boxes[r] * n + cols[r][0])
                        co = Cell(r, o_boxes[r] * n + cols[r][1])
                        if cx == co:
                            ok = False
                            break
                        markings.append((cx, MarkType.X))
                        markings.append((co, MarkType.O))
                    if ok:
                        yield GridDiagram(ls, n, tuple(markings))


def count_diagrams(ls: LensSpace, n: int) -> int:
    return sum(1 for _ in enumerate_diagrams(ls, n))
