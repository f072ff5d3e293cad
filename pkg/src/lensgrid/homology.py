"""Homology classes in H1(L(p,q)) = Z/p and lifts to the sphere.

The class delta of an oriented component counts its passages through the
glued horizontal edge: every vertical arc, traversed X -> O in increasing
column-cell order, contributes one downward passage each time k crosses a
multiple of n.  The lift of a diagram under the p-fold cyclic cover is a
grid diagram in L(1,0) of grid number N = p*n with one translated copy of
every marking per deck transformation; a component of class delta lifts to
gcd(delta, p) components.
"""

from __future__ import annotations

import math
from typing import List, Tuple

from .core import (
    Cell,
    Component,
    GridDiagram,
    LensSpace,
    MarkType,
    Marking,
    annulus_partner,
    rect_to_col_cell,
    require_valid,
    trace_components,
)


def homology_class(G: GridDiagram, c: Component) -> int:
    """delta of one component, as a residue mod p."""
    n, p = G.n, G.lens.p
    total = 0
    for i in c.marking_indices:
        cell, mark = G.markings[i]
        if mark is not MarkType.X:
            continue
        _, k_from = rect_to_col_cell(G.lens, n, cell)
        o_cell, _ = G.markings[annulus_partner(G, i)]
        _, k_to = rect_to_col_cell(G.lens, n, o_cell)
        if k_to < k_from:
            k_to += n * p
        total += k_to // n - k_from // n
    return total % p


def homology_multiset(G: GridDiagram) -> Tuple[int, ...]:
    """Sorted component classes; the isotopy/certificate invariant."""
    return tuple(sorted(homology_class(G, c) for c in trace_components(G)))


def is_primitive_homologous(G: GridDiagram) -> bool:
    """Whether the knot's class generates Z/p (knots only)."""
    comps = trace_components(G)
    if len(comps) != 1:
        raise ValueError(f"diagram has {len(comps)} components, expected a knot")
    return math.gcd(homology_class(G, comps[0]), G.lens.p) == 1


def lift_component_count_formula(G: GridDiagram) -> int:
    """Sum of gcd(delta_i, p) over components."""
    p = G.lens.p
    return sum(math.gcd(d, p) for d in homology_multiset(G))


def lift_grid(G: GridDiagram) -> GridDiagram:
    """Preimage under the cyclic cover: an N x N grid in L(1,0), N = p*n.

    Copy t of marking (r, x) sits at row t*n + r, column (x - t*q*n) mod p*n:
    a downward wrap adds q*n to the annulus coordinate, so successive copies
    must be offset by -q*n for vertical strands of the cover to be straight.
    """
    require_valid(G)
    n, p, q = G.n, G.lens.p, G.lens.q
    width = p * n
    marks: List[Marking] = []
    for cell, mark in G.markings:
        for t in range(p):
            marks.append((Cell(t * n + cell.r, (cell.x - t * q * n) % width), mark))
    return GridDiagram(LensSpace(1, 0), width, tuple(marks))
