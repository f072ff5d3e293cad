"""Isotopy moves on toroidal grid diagrams.

Three families generate isotopy of the underlying link:

* non-interleaving commutation of two adjacent rows or column annuli,
* (de)stabilization, trading a marking for an L-shaped triple in a new
  row/annulus pair (and back),
* torus translations.

Commutation level rule: the two markings of each exchanged row (annulus) sit
at rectangle columns x mod p*n (column-cells k mod n*p).  The move applies
when all four levels are distinct and the two pairs do not interleave in the
cyclic order, i.e. both levels of one pair fall in the same arc cut out by
the other pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple, Union

from .core import (
    Cell,
    GridDiagram,
    MarkType,
    Marking,
    rect_to_col_cell,
    require_valid,
    translate,
)


class InapplicableMove(Exception):
    """Raised when a move's applicability condition fails."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class Corner(Enum):
    NW = "NW"
    NE = "NE"
    SW = "SW"
    SE = "SE"

    @property
    def above(self) -> bool:
        return self in (Corner.NW, Corner.NE)

    @property
    def left(self) -> bool:
        return self in (Corner.NW, Corner.SW)


@dataclass(frozen=True)
class TranslateH:
    d: int

    def encode(self) -> Tuple[int, ...]:
        return (4, self.d)

    def __str__(self) -> str:
        return f"translate_h {self.d}"


@dataclass(frozen=True)
class TranslateV:
    d: int

    def encode(self) -> Tuple[int, ...]:
        return (5, self.d)

    def __str__(self) -> str:
        return f"translate_v {self.d}"


@dataclass(frozen=True)
class CommuteRows:
    r: int

    def encode(self) -> Tuple[int, ...]:
        return (0, self.r)

    def __str__(self) -> str:
        return f"commute_rows {self.r}"


@dataclass(frozen=True)
class CommuteCols:
    j: int

    def encode(self) -> Tuple[int, ...]:
        return (1, self.j)

    def __str__(self) -> str:
        return f"commute_cols {self.j}"


@dataclass(frozen=True)
class Destabilize:
    r: int
    x: int

    def encode(self) -> Tuple[int, ...]:
        return (2, self.r, self.x)

    def __str__(self) -> str:
        return f"destabilize {self.r} {self.x}"


@dataclass(frozen=True)
class Stabilize:
    m: int
    corner: Corner

    def encode(self) -> Tuple[int, ...]:
        return (3, self.m, list(Corner).index(self.corner))

    def __str__(self) -> str:
        return f"stabilize {self.m} {self.corner.value}"


MoveKind = Union[TranslateH, TranslateV, CommuteRows, CommuteCols, Destabilize, Stabilize]


def _interleaved(pair_a: Sequence[int], pair_b: Sequence[int], modulus: int) -> bool:
    """True iff pair_b separates pair_a on the cycle Z/modulus."""
    a1, a2 = pair_a
    inside = 0
    for b in pair_b:
        # b strictly inside the cyclic interval (a1, a2)
        if (b - a1) % modulus and (b - a1) % modulus < (a2 - a1) % modulus:
            inside += 1
    return inside == 1


def _check_levels(levels_a: List[int], levels_b: List[int], modulus: int) -> None:
    if len(set(levels_a + levels_b)) != 4:
        raise InapplicableMove("shared level")
    if _interleaved(levels_a, levels_b, modulus):
        raise InapplicableMove("interleaving")


def commute_rows(G: GridDiagram, r: int) -> GridDiagram:
    """Exchange rows r and r+1 when their marking levels do not interleave."""
    require_valid(G)
    if not 0 <= r <= G.n - 2:
        raise ValueError(f"row pair index {r} outside [0,{G.n - 1})")
    top = [G.markings[i] for i in G.by_row[r]]
    bot = [G.markings[i] for i in G.by_row[r + 1]]
    _check_levels([m[0].x for m in top], [m[0].x for m in bot], G.width)
    marks: List[Marking] = []
    for cell, mark in G.markings:
        if cell.r == r:
            cell = Cell(r + 1, cell.x)
        elif cell.r == r + 1:
            cell = Cell(r, cell.x)
        marks.append((cell, mark))
    return GridDiagram(G.lens, G.n, tuple(marks))


def commute_cols(G: GridDiagram, j: int) -> GridDiagram:
    """Exchange column annuli j and j+1; levels are column-cell indices."""
    require_valid(G)
    if not 0 <= j <= G.n - 2:
        raise ValueError(f"annulus pair index {j} outside [0,{G.n - 1})")
    ka = [rect_to_col_cell(G.lens, G.n, G.markings[i][0])[1] for i in G.by_annulus[j]]
    kb = [rect_to_col_cell(G.lens, G.n, G.markings[i][0])[1] for i in G.by_annulus[j + 1]]
    _check_levels(ka, kb, G.n * G.lens.p)
    marks: List[Marking] = []
    for cell, mark in G.markings:
        jj = cell.x % G.n
        if jj == j:
            cell = Cell(cell.r, cell.x + 1)
        elif jj == j + 1:
            cell = Cell(cell.r, cell.x - 1)
        marks.append((cell, mark))
    return GridDiagram(G.lens, G.n, tuple(marks))


def _square_cells(n2: int, width2: int, r: int, x: int) -> dict:
    return {
        Corner.NW: Cell(r, x),
        Corner.NE: Cell(r, x + 1),
        Corner.SW: Cell(r + 1, x),
        Corner.SE: Cell(r + 1, x + 1),
    }


_ADJACENT = {
    Corner.NW: (Corner.NE, Corner.SW),
    Corner.NE: (Corner.NW, Corner.SE),
    Corner.SW: (Corner.NW, Corner.SE),
    Corner.SE: (Corner.NE, Corner.SW),
}

_DIAGONAL = {
    Corner.NW: Corner.SE,
    Corner.NE: Corner.SW,
    Corner.SW: Corner.NE,
    Corner.SE: Corner.NW,
}


def stabilize(G: GridDiagram, m: int, corner: Corner) -> GridDiagram:
    """Grow the grid number by one at marking m.

    A new row is inserted above (NW/NE) or below (SW/SE) the marking's row
    and a new column annulus to its left (NW/SW) or right (NE/SE).  The
    marking of type T is removed; the resulting 2x2 square receives the
    complementary type at the chosen corner and T at the two adjacent
    corners, leaving the diagonally opposite corner empty.
    """
    require_valid(G)
    if not 0 <= m < len(G.markings):
        raise ValueError(f"marking index {m} outside [0,{len(G.markings)})")
    (cell, mark) = G.markings[m]
    n, p = G.n, G.lens.p
    n2 = n + 1
    r0, x0 = cell.r, cell.x
    j0, b0 = x0 % n, x0 // n

    def new_row(r: int) -> int:
        if corner.above:
            return r + 1 if r >= r0 else r
        return r + 1 if r > r0 else r

    def new_annulus(j: int) -> int:
        if corner.left:
            return j + 1 if j >= j0 else j
        return j + 1 if j > j0 else j

    marks: List[Marking] = []
    for i, (c, t) in enumerate(G.markings):
        if i == m:
            continue
        b, j = c.x // n, c.x % n
        marks.append((Cell(new_row(c.r), b * n2 + new_annulus(j)), t))
    square = _square_cells(n2, p * n2, r0, b0 * n2 + j0)
    marks.append((square[corner], mark.complement()))
    for adj in _ADJACENT[corner]:
        marks.append((square[adj], mark))
    return GridDiagram(G.lens, n2, tuple(marks))


def destabilize(G: GridDiagram, r: int, x: int) -> GridDiagram:
    """Shrink the grid number by one at the 2x2 square with top-left (r, x).

    The square must lie inside one box with three markings: T-bar at some
    corner and T at the two adjacent corners.  The T-bar corner's row and
    annulus are deleted and T placed at the merged cell of the empty corner.
    """
    require_valid(G)
    n, p = G.n, G.lens.p
    if n == 1:
        raise InapplicableMove("grid number 1 cannot destabilize")
    if not (0 <= r <= n - 2):
        raise ValueError(f"square row {r} outside [0,{n - 1})")
    if not (0 <= x < p * n and x % n <= n - 2):
        raise ValueError(f"square column {x} not inside one box")
    square = _square_cells(n, p * n, r, x)
    present = {c: G.mark_by_cell.get(cell) for c, cell in square.items()}
    filled = [c for c, t in present.items() if t is not None]
    if len(filled) != 3:
        raise InapplicableMove("square does not hold exactly 3 markings")
    (empty,) = [c for c, t in present.items() if t is None]
    cbar = _DIAGONAL[empty]
    t_bar = present[cbar]
    adj = _ADJACENT[cbar]
    if present[adj[0]] != present[adj[1]] or present[adj[0]] != t_bar.complement():
        raise InapplicableMove("square marking pattern does not match")
    t = t_bar.complement()

    rc = square[cbar].r
    jc = square[cbar].x % n
    n2 = n - 1

    def new_row(rr: int) -> int:
        return rr - 1 if rr > rc else rr

    def new_x(c: Cell) -> int:
        b, j = c.x // n, c.x % n
        return b * n2 + (j - 1 if j > jc else j)

    square_cells = set(square.values())
    marks: List[Marking] = []
    for c, tt in G.markings:
        if c in square_cells:
            continue
        marks.append((Cell(new_row(c.r), new_x(c)), tt))
    merged = Cell(new_row(square[empty].r), new_x(square[empty]))
    marks.append((merged, t))
    return GridDiagram(G.lens, n2, tuple(marks))


def apply_move(G: GridDiagram, move: MoveKind) -> GridDiagram:
    if isinstance(move, TranslateH):
        return translate(G, 0, move.d)
    if isinstance(move, TranslateV):
        return translate(G, move.d, 0)
    if isinstance(move, CommuteRows):
        return commute_rows(G, move.r)
    if isinstance(move, CommuteCols):
        return commute_cols(G, move.j)
    if isinstance(move, Destabilize):
        return destabilize(G, move.r, move.x)
    if isinstance(move, Stabilize):
        return stabilize(G, move.m, move.corner)
    raise TypeError(f"unknown move {move!r}")


def apply_moves(G: GridDiagram, moves: Iterable[MoveKind]) -> GridDiagram:
    for mv in moves:
        G = apply_move(G, mv)
    return G


def _created_square(G: GridDiagram, m: int, corner: Corner) -> Tuple[int, int]:
    """Top-left (r, x) of the square stabilize(G, m, corner) creates."""
    cell, _ = G.markings[m]
    n = G.n
    return cell.r, (cell.x // n) * (n + 1) + cell.x % n


def invert_move(G: GridDiagram, move: MoveKind) -> MoveKind:
    """The move taking apply_move(G, move) back to G, exactly."""
    if isinstance(move, TranslateH):
        return TranslateH(-move.d)
    if isinstance(move, TranslateV):
        return TranslateV(-move.d)
    if isinstance(move, (CommuteRows, CommuteCols)):
        return move
    if isinstance(move, Stabilize):
        r, x = _created_square(G, move.m, move.corner)
        return Destabilize(r, x)
    if isinstance(move, Destabilize):
        square = _square_cells(G.n, G.width, move.r, move.x)
        present = {c: G.mark_by_cell.get(cell) for c, cell in square.items()}
        (empty,) = [c for c, t in present.items() if t is None]
        cbar = _DIAGONAL[empty]
        H = destabilize(G, move.r, move.x)
        n2 = G.n - 1
        rc = square[cbar].r
        jc = square[cbar].x % G.n
        e = square[empty]
        merged = Cell(
            e.r - 1 if e.r > rc else e.r,
            (e.x // G.n) * n2 + ((e.x % G.n) - 1 if e.x % G.n > jc else e.x % G.n),
        )
        idx = [i for i, (c, _) in enumerate(H.markings) if c == merged]
        return Stabilize(idx[0], cbar)
    raise TypeError(f"unknown move {move!r}")


def neighbors(G: GridDiagram, n_max: int) -> Tuple[Tuple[MoveKind, GridDiagram], ...]:
    """Applicable single moves in deterministic order.

    Commutations and destabilizations are enumerated inside the fundamental
    rectangle; positions wrapping an edge are reached by translating first.
    """
    require_valid(G)
    out: List[Tuple[MoveKind, GridDiagram]] = []
    for r in range(G.n - 1):
        try:
            out.append((CommuteRows(r), commute_rows(G, r)))
        except InapplicableMove:
            pass
    for j in range(G.n - 1):
        try:
            out.append((CommuteCols(j), commute_cols(G, j)))
        except InapplicableMove:
            pass
    if G.n >= 2:
        for r in range(G.n - 1):
            for x in range(G.width):
                if x % G.n > G.n - 2:
                    continue
                mv = Destabilize(r, x)
                try:
                    out.append((mv, destabilize(G, r, x)))
                except InapplicableMove:
                    pass
    if G.n < n_max:
        for m in range(len(G.markings)):
            for corner in Corner:
                out.append((Stabilize(m, corner), stabilize(G, m, corner)))
    for mv in (TranslateH(1), TranslateH(-1), TranslateV(1), TranslateV(-1)):
        out.append((mv, apply_move(G, mv)))
    return tuple(out)


def search_edges(G: GridDiagram, n_max: int) -> List[Tuple[Tuple[MoveKind, ...], GridDiagram]]:
    """Edges for the canonical-form search: short primitive move sequences.

    Extends `neighbors` with translate-normalized variants so commutations
    and destabilizations that wrap the glued edges are reachable from a
    canonical representative.  Emitted sequences replay exactly.
    """
    n, width, qn = G.n, G.width, G.lens.q * G.n
    edges: List[Tuple[Tuple[MoveKind, ...], GridDiagram]] = []

    def attempt(prims: Tuple[MoveKind, ...]) -> None:
        try:
            H = apply_moves(G, prims)
        except InapplicableMove:
            return
        edges.append((prims, H))

    if n >= 2:
        for r in range(n):
            if r < n - 1:
                attempt((CommuteRows(r),))
            else:
                attempt((TranslateV(1), CommuteRows(0)))
        for j in range(n):
            if j < n - 1:
                attempt((CommuteCols(j),))
            else:
                attempt((TranslateH(1), CommuteCols(0)))
    if n >= 2:
        anchors = set()
        for cell, _ in G.markings:
            for dr_a in (0, -1):
                ra = (cell.r + dr_a) % n
                if dr_a == -1 and cell.r == 0:
                    base = (cell.x - qn) % width
                else:
                    base = cell.x
                for dx_a in (0, -1):
                    anchors.add((ra, (base + dx_a) % width))
        for ra, xa in sorted(anchors):
            prims: List[MoveKind] = []
            if ra == n - 1:
                prims.append(TranslateV(1))
                ra, xa = 0, (xa + qn) % width
            if xa % n == n - 1:
                prims.append(TranslateH(1))
                xa = (xa + 1) % width
            prims.append(Destabilize(ra, xa))
            attempt(tuple(prims))
    if n < n_max:
        for m in range(len(G.markings)):
            for corner in Corner:
                attempt((Stabilize(m, corner),))
    return edges
