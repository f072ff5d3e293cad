"""Lens spaces and toroidal grid diagrams.

Coordinate conventions, 0-based throughout:

* A grid diagram of grid number n in L(p,q) lives on a rectangle of p boxes
  of size n x n: rows r in [0, n), rectangle columns x in [0, p*n).
* The left and right sides of the rectangle are glued directly; the top is
  glued to the bottom with a shift, so that descending off the bottom edge at
  column x re-enters the top edge at column (x + q*n) mod p*n.
* Column annulus j in [0, n) is the set of cells with x = j (mod n); it meets
  the rectangle in p vertical strips.  Walking down the annulus from the top
  of the strip at x = j, the column-cell index k in [0, n*p) enumerates its
  cells: cell k sits at row k mod n in the strip visited after floor(k/n)
  passes through the bottom edge.
* Arcs are oriented O -> X rightward inside rows and X -> O downward inside
  column annuli; vertical arcs cross horizontal arcs in front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterator, List, Sequence, Tuple


class MarkType(Enum):
    O = "O"
    X = "X"

    def complement(self) -> "MarkType":
        return MarkType.X if self is MarkType.O else MarkType.O

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Cell:
    """Rectangle coordinates: row r, column x."""

    r: int
    x: int


Marking = Tuple[Cell, MarkType]


@dataclass(frozen=True)
class LensSpace:
    """L(p,q) with p >= 1, 0 <= q < p, gcd(p,q) = 1; L(1,0) is the 3-sphere."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"p must be positive, got {self.p}")
        if not 0 <= self.q < self.p and not (self.p == 1 and self.q == 0):
            raise ValueError(f"q must lie in [0, p), got q={self.q} for p={self.p}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd(p, q) must be 1, got L({self.p},{self.q})")

    @property
    def is_sphere(self) -> bool:
        return self.p == 1

    def q_inverse(self) -> int:
        """Multiplicative inverse of q mod p (0 for the sphere, where q = 0)."""
        if self.p == 1:
            return 0
        return pow(self.q, -1, self.p)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class GridDiagram:
    """Marking set on the p-box rectangle.

    The constructor accepts any in-range marking set with pairwise distinct
    cells so that broken diagrams can be inspected; `validate` reports the
    one-X-one-O-per-row/annulus constraints that make a diagram a link.
    """

    lens: LensSpace
    n: int
    markings: Tuple[Marking, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"grid number must be positive, got {self.n}")
        width = self.lens.p * self.n
        seen = set()
        for cell, mark in self.markings:
            if not isinstance(mark, MarkType):
                raise ValueError(f"bad mark type {mark!r}")
            if not (0 <= cell.r < self.n and 0 <= cell.x < width):
                raise ValueError(f"cell {cell} outside {self.n} x {width} rectangle")
            if cell in seen:
                raise ValueError(f"two markings share cell {cell}")
            seen.add(cell)
        ordered = tuple(sorted(self.markings, key=lambda m: (m[0].r, m[0].x)))
        object.__setattr__(self, "markings", ordered)

    @property
    def width(self) -> int:
        return self.lens.p * self.n

    @cached_property
    def mark_by_cell(self) -> Dict[Cell, MarkType]:
        return {cell: mark for cell, mark in self.markings}

    @cached_property
    def by_row(self) -> Dict[int, List[int]]:
        rows: Dict[int, List[int]] = {r: [] for r in range(self.n)}
        for i, (cell, _) in enumerate(self.markings):
            rows[cell.r].append(i)
        return rows

    @cached_property
    def by_annulus(self) -> Dict[int, List[int]]:
        cols: Dict[int, List[int]] = {j: [] for j in range(self.n)}
        for i, (cell, _) in enumerate(self.markings):
            cols[cell.x % self.n].append(i)
        return cols

    def cells_of(self, mark: MarkType) -> List[Cell]:
        return [cell for cell, m in self.markings if m is mark]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: Tuple[str, ...]


@dataclass(frozen=True)
class Component:
    """Cyclic marking sequence in orientation order (X -> annulus partner O,
    O -> row partner X); entries are indices into GridDiagram.markings."""

    marking_indices: Tuple[int, ...]


def validate(G: GridDiagram) -> ValidationReport:
    """Check the one-X-one-O-per-row and per-column-annulus constraints."""
    violations: List[str] = []
    for r in range(G.n):
        counts = {MarkType.X: 0, MarkType.O: 0}
        for i in G.by_row[r]:
            counts[G.markings[i][1]] += 1
        for mark, c in counts.items():
            if c != 1:
                violations.append(f"row {r}: {c} {mark} markings, expected 1")
    for j in range(G.n):
        counts = {MarkType.X: 0, MarkType.O: 0}
        for i in G.by_annulus[j]:
            counts[G.markings[i][1]] += 1
        for mark, c in counts.items():
            if c != 1:
                violations.append(f"column annulus {j}: {c} {mark} markings, expected 1")
    return ValidationReport(ok=not violations, violations=tuple(violations))


def require_valid(G: GridDiagram) -> None:
    report = validate(G)
    if not report.ok:
        raise ValueError("invalid grid diagram: " + "; ".join(report.violations))


def col_cell_to_rect(ls: LensSpace, n: int, j: int, k: int) -> Cell:
    """Rectangle cell of column-cell k in annulus j.

    Strip t = floor(k/n) of the annulus sits at rectangle columns congruent to
    j shifted by t passes through the glued edge, each pass adding q*n.
    """
    if not 0 <= j < n:
        raise ValueError(f"annulus index {j} outside [0,{n})")
    if not 0 <= k < n * ls.p:
        raise ValueError(f"column-cell index {k} outside [0,{n * ls.p})")
    t = k // n
    return Cell(r=k % n, x=(j + t * ls.q * n) % (ls.p * n))


def rect_to_col_cell(ls: LensSpace, n: int, cell: Cell) -> Tuple[int, int]:
    """Inverse of col_cell_to_rect: (annulus j, column-cell k) of a cell."""
    j = cell.x % n
    box = cell.x // n
    t = (box * ls.q_inverse()) % ls.p if ls.p > 1 else 0
    return j, t * n + cell.r


def row_partner(G: GridDiagram, i: int) -> int:
    """Index of the other marking in the same row."""
    cell, _ = G.markings[i]
    others = [m for m in G.by_row[cell.r] if m != i]
    if len(others) != 1:
        raise ValueError(f"row {cell.r} does not contain exactly 2 markings")
    return others[0]


def annulus_partner(G: GridDiagram, i: int) -> int:
    """Index of the other marking in the same column annulus."""
    cell, _ = G.markings[i]
    others = [m for m in G.by_annulus[cell.x % G.n] if m != i]
    if len(others) != 1:
        raise ValueError(f"column annulus {cell.x % G.n} does not contain exactly 2 markings")
    return others[0]


def trace_components(G: GridDiagram) -> Tuple[Component, ...]:
    """Split the markings into oriented link components.

    Walks X -> O along the column annulus and O -> X along the row, starting
    each component at its smallest unvisited marking index.
    """
    require_valid(G)
    visited = set()
    components: List[Component] = []
    for start in range(len(G.markings)):
        if start in visited:
            continue
        seq: List[int] = []
        i = start
        while i not in visited:
            visited.add(i)
            seq.append(i)
            _, mark = G.markings[i]
            i = annulus_partner(G, i) if mark is MarkType.X else row_partner(G, i)
        components.append(Component(tuple(seq)))
    return tuple(components)


def translate(G: GridDiagram, dr: int, dx: int) -> GridDiagram:
    """Torus translation: dr rows down, then dx columns right.

    A marking pushed past the bottom edge re-enters the top q*n columns to
    the right, once per pass.
    """
    n, width, qn = G.n, G.width, G.lens.q * G.n
    marks = []
    for cell, mark in G.markings:
        passes = (cell.r + dr) // n
        r2 = (cell.r + dr) % n
        x2 = (cell.x + dx + passes * qn) % width
        marks.append((Cell(r2, x2), mark))
    return GridDiagram(G.lens, n, tuple(marks))


# --- text format -----------------------------------------------------------
#
#   lens <p> <q>
#   grid <n>
#   <n rows of p*n characters over . X O>
#
# '#' starts a comment line; blank lines are ignored; LF endings.


class GridFormatError(ValueError):
    pass


def parse(text: str) -> GridDiagram:
    lines = [ln for ln in text.split("\n") if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) < 2:
        raise GridFormatError("expected 'lens p q' and 'grid n' header lines")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "lens":
        raise GridFormatError(f"bad lens header: {lines[0]!r}")
    body_head = lines[1].split()
    if len(body_head) != 2 or body_head[0] != "grid":
        raise GridFormatError(f"bad grid header: {lines[1]!r}")
    try:
        p, q, n = int(head[1]), int(head[2]), int(body_head[1])
    except ValueError as exc:
        raise GridFormatError(f"non-integer header field: {exc}") from exc
    try:
        ls = LensSpace(p, q)
    except ValueError as exc:
        raise GridFormatError(str(exc)) from exc
    if n < 1:
        raise GridFormatError(f"grid number must be positive, got {n}")
    rows = lines[2:]
    if len(rows) != n:
        raise GridFormatError(f"expected {n} rows, found {len(rows)}")
    width = p * n
    marks: List[Marking] = []
    for r, row in enumerate(rows):
        if len(row) != width:
            raise GridFormatError(f"row {r} has length {len(row)}, expected {width}")
        for x, ch in enumerate(row):
            if ch == ".":
                continue
            if ch == "X":
                marks.append((Cell(r, x), MarkType.X))
            elif ch == "O":
                marks.append((Cell(r, x), MarkType.O))
            else:
                raise GridFormatError(f"illegal character {ch!r} at row {r}, column {x}")
    try:
        return GridDiagram(ls, n, tuple(marks))
    except ValueError as exc:
        raise GridFormatError(str(exc)) from exc


def _body_rows(G: GridDiagram) -> List[str]:
    rows = [["."] * G.width for _ in range(G.n)]
    for cell, mark in G.markings:
        rows[cell.r][cell.x] = mark.value
    return ["".join(row) for row in rows]


def serialize(G: GridDiagram) -> str:
    head = f"lens {G.lens.p} {G.lens.q}\ngrid {G.n}\n"
    return head + "\n".join(_body_rows(G)) + "\n"


def grid_from_rows(ls: LensSpace, rows: Sequence[str]) -> GridDiagram:
    """Build a diagram from body rows; convenient in tests."""
    return parse(f"lens {ls.p} {ls.q}\ngrid {len(rows)}\n" + "\n".join(rows) + "\n")


ANSI_RED = "\x1b[31m"
ANSI_BLUE = "\x1b[34m"
ANSI_RESET = "\x1b[0m"


def render_ascii(G: GridDiagram, color: bool = False) -> str:
    """Desk rendering: markings, arc overlay, box separators, gluing labels.

    Horizontal arcs run O -> X rightward ('-'), vertical arcs run X -> O down
    the column annulus ('|', drawn on top at shared cells).  Box b's bottom
    edge meets box (b+q) mod p's top edge; the label rows show that shift.
    """
    n, p, width = G.n, G.lens.p, G.width
    canvas = [["."] * width for _ in range(n)]
    # horizontal arcs
    for r in range(n):
        row_marks = {G.markings[i][1]: G.markings[i][0].x for i in G.by_row[r]}
        if set(row_marks) == {MarkType.X, MarkType.O}:
            xo, xx = row_marks[MarkType.O], row_marks[MarkType.X]
            step = (xo + 1) % width
            while step != xx:
                canvas[r][step] = "-"
                step = (step + 1) % width
    # vertical arcs, drawn after so crossings show the strand in front
    for j in range(n):
        idx = G.by_annulus[j]
        marks = {G.markings[i][1]: rect_to_col_cell(G.lens, n, G.markings[i][0])[1] for i in idx}
        if set(marks) == {MarkType.X, MarkType.O}:
            kx, ko = marks[MarkType.X], marks[MarkType.O]
            k = (kx + 1) % (n * p)
            while k != ko:
                cell = col_cell_to_rect(G.lens, n, j, k)
                canvas[cell.r][cell.x] = "|"
                k = (k + 1) % (n * p)
    for cell, mark in G.markings:
        canvas[cell.r][cell.x] = mark.value

    def paint(ch: str) -> str:
        if color and ch == "X":
            return f"{ANSI_RED}X{ANSI_RESET}"
        if color and ch == "O":
            return f"{ANSI_BLUE}O{ANSI_RESET}"
        return ch

    def with_gaps(chars: Iterator[str]) -> str:
        out = []
        for x, ch in enumerate(chars):
            if x and x % n == 0:
                out.append(" ")
            out.append(ch)
        return "".join(out)

    top = with_gaps(iter([str(b % 10).center(1) if i == n // 2 else " " for b in range(p) for i in range(n)]))
    bottom = with_gaps(
        iter([str((b + G.lens.q) % p % 10) if i == n // 2 else " " for b in range(p) for i in range(n)])
    )
    lines = [f"{G.lens} grid {n}", top]
    for r in range(n):
        lines.append(with_gaps(iter([paint(ch) for ch in canvas[r]])))
    lines.append(bottom)
    return "\n".join(lines) + "\n"
