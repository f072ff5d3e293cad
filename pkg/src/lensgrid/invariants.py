"""Classical invariants of the planar diagram of a sphere (p = 1) grid.

Planarization uses straight, non-wrapping arcs in the N x N square: the
horizontal arc of a row runs O -> X, the vertical arc of a column runs
X -> O, and vertical arcs cross in front.  A crossing's sign is +1 when
(over direction, under direction) is a positively oriented frame, which for
this geometry reduces to sign = dv * dh with dv = +1 for a downward vertical
arc and dh = +1 for a rightward horizontal arc.

Kauffman bracket conventions: with the vertical strand in front, the A
smoothing joins up-right and down-left, the B smoothing up-left and
down-right; each state contributes A^(a-b) d^(loops-1) with
d = -A^2 - A^(-2).  The normalized polynomial multiplies by (-A^3)^(-writhe)
and is invariant under the grid moves; a non-palindromic value certifies a
link inequivalent to its mirror image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import kernels
from .core import GridDiagram, MarkType, Cell, trace_components, require_valid
from .homology import lift_grid
from .laurent import LOOP_FACTOR, LaurentPoly


class CapExceeded(Exception):
    def __init__(self, crossings: int, cap: int):
        super().__init__(f"{crossings} crossings exceed cap {cap}")
        self.crossings = crossings
        self.cap = cap


DEFAULT_CAP = 16


@dataclass(frozen=True)
class PlanarCrossing:
    row: int  # under-arc id: the horizontal arc of this row
    col: int  # over-arc id: the vertical arc of this column
    sign: int


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossing list plus the 4-valent strand structure of a p=1 grid."""

    n: int
    crossings: Tuple[PlanarCrossing, ...]
    # per crossing: strand-class ids at its up, down, left, right ends
    quads: Tuple[int, ...]
    n_strand_classes: int
    free_circles: int
    vertical_component: Tuple[int, ...]
    horizontal_component: Tuple[int, ...]
    n_components: int


def _require_sphere(G: GridDiagram) -> None:
    if G.lens.p != 1:
        raise ValueError(f"planar operations need a p=1 grid, got {G.lens}")


def planar_diagram(G1: GridDiagram) -> PlanarDiagram:
    _require_sphere(G1)
    require_valid(G1)
    n = G1.n
    x_row = {}
    o_row = {}
    x_col = {}
    o_col = {}
    for cell, mark in G1.markings:
        if mark is MarkType.X:
            x_row[cell.r] = cell.x
            x_col[cell.x] = cell.r
        else:
            o_row[cell.r] = cell.x
            o_col[cell.x] = cell.r

    crossings: List[PlanarCrossing] = []
    for c in range(n):
        top, bottom = sorted((x_col[c], o_col[c]))
        dv = 1 if o_col[c] > x_col[c] else -1
        for r in range(top + 1, bottom):
            left, right = sorted((o_row[r], x_row[r]))
            if left < c < right:
                dh = 1 if x_row[r] > o_row[r] else -1
                crossings.append(PlanarCrossing(row=r, col=c, sign=dv * dh))
    crossings.sort(key=lambda cr: (cr.row, cr.col))

    # strand pieces between consecutive crossings along each arc
    on_col: Dict[int, List[int]] = {c: [] for c in range(n)}
    on_row: Dict[int, List[int]] = {r: [] for r in range(n)}
    for idx, cr in enumerate(crossings):
        on_col[cr.col].append(idx)
        on_row[cr.row].append(idx)
    for c in range(n):
        on_col[c].sort(key=lambda idx: crossings[idx].row)
    for r in range(n):
        on_row[r].sort(key=lambda idx: crossings[idx].col)

    piece_id: Dict[Tuple[str, int, int], int] = {}

    def pid(kind: str, seg: int, i: int) -> int:
        return piece_id.setdefault((kind, seg, i), len(piece_id))

    for c in range(n):
        for i in range(len(on_col[c]) + 1):
            pid("v", c, i)
    for r in range(n):
        for i in range(len(on_row[r]) + 1):
            pid("h", r, i)

    parent = list(range(len(piece_id)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    # join the vertical and horizontal end pieces meeting at each marking
    for cell, _ in G1.markings:
        r, c = cell.r, cell.x
        v_end = 0 if r == min(x_col[c], o_col[c]) else len(on_col[c])
        h_end = 0 if c == min(x_row[r], o_row[r]) else len(on_row[r])
        union(pid("v", c, v_end), pid("h", r, h_end))

    # slots: piece above/below (along the column) and left/right (along the row)
    quads: List[int] = []
    slot_roots: List[int] = []
    for idx, cr in enumerate(crossings):
        iv = on_col[cr.col].index(idx)
        ih = on_row[cr.row].index(idx)
        for key in (
            ("v", cr.col, iv),
            ("v", cr.col, iv + 1),
            ("h", cr.row, ih),
            ("h", cr.row, ih + 1),
        ):
            slot_roots.append(find(pid(*key)))
    relabel: Dict[int, int] = {}
    for root in slot_roots:
        relabel.setdefault(root, len(relabel))
    quads = [relabel[root] for root in slot_roots]
    m = len(relabel)
    assert m == 2 * len(crossings) or not crossings

    all_roots = {find(i) for i in range(len(piece_id))}
    free = len(all_roots) - m

    comps = trace_components(G1)
    comp_of_marking = {}
    for label, comp in enumerate(comps):
        for i in comp.marking_indices:
            comp_of_marking[i] = label
    cell_comp = {G1.markings[i][0]: comp_of_marking[i] for i in range(len(G1.markings))}
    vertical_component = tuple(cell_comp[Cell(x_col[c], c)] for c in range(n))
    horizontal_component = tuple(cell_comp[Cell(r, x_row[r])] for r in range(n))

    return PlanarDiagram(
        n=n,
        crossings=tuple(crossings),
        quads=tuple(quads),
        n_strand_classes=m,
        free_circles=free,
        vertical_component=vertical_component,
        horizontal_component=horizontal_component,
        n_components=len(comps),
    )


def writhe(pd: PlanarDiagram) -> int:
    return sum(cr.sign for cr in pd.crossings)


def linking_matrix(pd: PlanarDiagram) -> Tuple[Tuple[int, ...], ...]:
    """Symmetric matrix: off-diagonal entries are linking numbers (half the
    signed count of mixed crossings), diagonal entries self-writhes."""
    nu = pd.n_components
    acc = [[0] * nu for _ in range(nu)]
    for cr in pd.crossings:
        ci = pd.vertical_component[cr.col]
        cj = pd.horizontal_component[cr.row]
        acc[ci][cj] += cr.sign
        if ci != cj:
            acc[cj][ci] += cr.sign
    out = []
    for i in range(nu):
        row = []
        for j in range(nu):
            if i == j:
                row.append(acc[i][i])
            else:
                if acc[i][j] % 2:
                    raise ValueError("odd mixed crossing sum; diagram is not a valid link")
                row.append(acc[i][j] // 2)
        out.append(tuple(row))
    return tuple(out)


def kauffman_bracket(pd: PlanarDiagram, cap: int = DEFAULT_CAP) -> LaurentPoly:
    c = len(pd.crossings)
    if c > cap:
        raise CapExceeded(c, cap)
    if c == 0:
        return LOOP_FACTOR ** (pd.free_circles - 1)
    counts = kernels.bracket_counts(c, list(pd.quads), pd.n_strand_classes)
    d_powers = [LaurentPoly.one()]
    for _ in range(pd.n_strand_classes + pd.free_circles):
        d_powers.append(d_powers[-1] * LOOP_FACTOR)
    total = LaurentPoly.zero()
    for loops, row in enumerate(counts):
        for b, count in enumerate(row):
            if count:
                term = LaurentPoly.monomial(count, c - 2 * b)
                total = total + term * d_powers[loops + pd.free_circles - 1]
    return total


def normalized_poly(pd: PlanarDiagram, cap: int = DEFAULT_CAP) -> LaurentPoly:
    w = writhe(pd)
    sign = -1 if w % 2 else 1
    return kauffman_bracket(pd, cap) * LaurentPoly.monomial(sign, -3 * w)


def mirror(G1: GridDiagram) -> GridDiagram:
    """Left-right flip with mark types swapped; presents the mirror link."""
    _require_sphere(G1)
    width = G1.width
    marks = [(Cell(c.r, width - 1 - c.x), t.complement()) for c, t in G1.markings]
    return GridDiagram(G1.lens, G1.n, tuple(marks))


def lift_planar_diagram(G: GridDiagram) -> PlanarDiagram:
    """Planar diagram of the lift; the diagram itself when already p=1."""
    return planar_diagram(G if G.lens.p == 1 else lift_grid(G))


def normalized_lift_poly(G: GridDiagram, cap: int = DEFAULT_CAP) -> LaurentPoly:
    return normalized_poly(lift_planar_diagram(G), cap)
