"""Canonical forms, equivalence search, and grid-number tabulation.

Canonical form quotients the torus translations: among the n * p*n
translates of a diagram, the one whose serialization body is
lexicographically least is the representative, so two diagrams have equal
canonical forms iff they differ by a translation.

The search runs a bidirectional BFS over canonical forms.  Edges are short
primitive move sequences that replay exactly (wrapping commutations and
destabilizations are reached by translating first), so a positive verdict
carries a move path taking the first input diagram to the second, exactly.
A negative verdict is only ever certified by an invariant: component count,
homology multiset, or the normalized polynomial of the lift.  Exhausting
the bounded search space or the node budget yields `unknown`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernels
from .core import (
    GridDiagram,
    LensSpace,
    MarkType,
    require_valid,
    serialize,
    trace_components,
    translate,
)
from .corpus import enumerate_diagrams
from .diffeo import diffeo_orbit
from .homology import homology_multiset
from .invariants import DEFAULT_CAP, CapExceeded, normalized_lift_poly
from .laurent import LaurentPoly
from .moves import (
    MoveKind,
    TranslateH,
    TranslateV,
    apply_move,
    invert_move,
    search_edges,
)

DEFAULT_NODE_BUDGET = 1_000_000


def canonical_shift(G: GridDiagram) -> Tuple[int, int]:
    """The (dr, dx) whose translate has the lex-least serialization body."""
    marks = [(c.r, c.x, 1 if t is MarkType.X else 0) for c, t in G.markings]
    return kernels.min_translation(G.n, G.lens.p, G.lens.q, marks)


def canonical_diagram(G: GridDiagram) -> GridDiagram:
    dr, dx = canonical_shift(G)
    return translate(G, dr, dx)


def canonical_form(G: GridDiagram) -> str:
    return serialize(canonical_diagram(G))


def _shift_moves(dr: int, dx: int) -> Tuple[MoveKind, ...]:
    out: List[MoveKind] = []
    if dr:
        out.append(TranslateV(dr))
    if dx:
        out.append(TranslateH(dx))
    return tuple(out)


@dataclass(frozen=True)
class Certificates:
    components: int
    homology: Tuple[int, ...]
    lift_poly: Optional[LaurentPoly]  # None when the lift exceeds the crossing cap


def compute_certificates(G: GridDiagram, cap: int = DEFAULT_CAP) -> Certificates:
    comps = len(trace_components(G))
    hom = homology_multiset(G)
    try:
        poly: Optional[LaurentPoly] = normalized_lift_poly(G, cap)
    except CapExceeded:
        poly = None
    return Certificates(comps, hom, poly)


def _fmt_multiset(values: Sequence[int]) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def certificate_witness(ca: Certificates, cb: Certificates) -> Optional[str]:
    """A human-readable invariant mismatch, or None when all certificates agree."""
    if ca.components != cb.components:
        return f"component count {ca.components} != {cb.components}"
    if ca.homology != cb.homology:
        return (
            f"homology multiset {_fmt_multiset(ca.homology)} != {_fmt_multiset(cb.homology)}"
        )
    if ca.lift_poly is not None and cb.lift_poly is not None and ca.lift_poly != cb.lift_poly:
        return f"lift polynomial {ca.lift_poly} != {cb.lift_poly}"
    return None


class Verdict(Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct_certified"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivalenceReport:
    verdict: Verdict
    path: Optional[Tuple[MoveKind, ...]]
    witness: Optional[str]
    reason: str  # "certificate" | "met" | "exhausted" | "budget"
    nodes_expanded: int
    states_seen: int


def _invert_path(origin: GridDiagram, path: Sequence[MoveKind]) -> Tuple[MoveKind, ...]:
    """Moves replaying the end diagram of (origin, path) back to origin."""
    inv: List[MoveKind] = []
    cur = origin
    for mv in path:
        inv.append(invert_move(cur, mv))
        cur = apply_move(cur, mv)
    inv.reverse()
    return tuple(inv)


# visited entry: (representative diagram, parent key or None, edge from parent)
_Entry = Tuple[GridDiagram, Optional[str], Tuple[MoveKind, ...]]


def _chain(visited: Dict[str, _Entry], key: str) -> Tuple[MoveKind, ...]:
    edges: List[Tuple[MoveKind, ...]] = []
    k: Optional[str] = key
    while k is not None:
        _, parent, edge = visited[k]
        edges.append(edge)
        k = parent
    moves: List[MoveKind] = []
    for edge in reversed(edges):
        moves.extend(edge)
    return tuple(moves)


def isotopy_search(
    A: GridDiagram,
    B: GridDiagram,
    n_max: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_CAP,
) -> EquivalenceReport:
    """Decide grid-move equivalence of A and B within grid number n_max.

    Returns EQUIVALENT with an exactly replaying move path, DISTINCT with an
    invariant witness, or UNKNOWN when the bounded search is inconclusive.
    """
    if A.lens != B.lens:
        raise ValueError(f"diagrams live in different lens spaces: {A.lens} vs {B.lens}")
    require_valid(A)
    require_valid(B)
    if n_max is None:
        n_max = max(A.n, B.n) + 2
    if n_max < max(A.n, B.n):
        raise ValueError(f"n_max {n_max} below input grid number {max(A.n, B.n)}")

    witness = certificate_witness(compute_certificates(A, cap), compute_certificates(B, cap))
    if witness is not None:
        return EquivalenceReport(Verdict.DISTINCT, None, witness, "certificate", 0, 0)

    sa = canonical_shift(A)
    sb = canonical_shift(B)
    rep_a = translate(A, *sa)
    rep_b = translate(B, *sb)
    key_a = serialize(rep_a)
    key_b = serialize(rep_b)
    visited_a: Dict[str, _Entry] = {key_a: (rep_a, None, _shift_moves(*sa))}
    visited_b: Dict[str, _Entry] = {key_b: (rep_b, None, _shift_moves(*sb))}
    queue_a: List[str] = [key_a]
    queue_b: List[str] = [key_b]
    head_a = head_b = 0
    expanded = 0

    def report_met(meet: str) -> EquivalenceReport:
        to_meet = _chain(visited_a, meet)
        from_meet = _invert_path(B, _chain(visited_b, meet))
        return EquivalenceReport(
            Verdict.EQUIVALENT,
            to_meet + from_meet,
            None,
            "met",
            expanded,
            len(visited_a) + len(visited_b),
        )

    while head_a < len(queue_a) or head_b < len(queue_b):
        if expanded >= node_budget:
            return EquivalenceReport(
                Verdict.UNKNOWN, None, None, "budget", expanded, len(visited_a) + len(visited_b)
            )
        pending_a = len(queue_a) - head_a
        pending_b = len(queue_b) - head_b
        side_a = pending_a > 0 and (pending_b == 0 or pending_a <= pending_b)
        if side_a:
            key = queue_a[head_a]
            head_a += 1
            own, other, queue = visited_a, visited_b, queue_a
        else:
            key = queue_b[head_b]
            head_b += 1
            own, other, queue = visited_b, visited_a, queue_b
        if key in other:
            return report_met(key)
        expanded += 1
        rep = own[key][0]
        for prims, child in search_edges(rep, n_max):
            shift = canonical_shift(child)
            child_rep = translate(child, *shift)
            ckey = serialize(child_rep)
            if ckey not in own:
                own[ckey] = (child_rep, key, prims + _shift_moves(*shift))
                queue.append(ckey)

    return EquivalenceReport(
        Verdict.UNKNOWN, None, None, "exhausted", expanded, len(visited_a) + len(visited_b)
    )


@dataclass(frozen=True)
class DiffeoReport:
    verdict: Verdict
    element: Optional[str]  # orbit label of the element whose image reached B
    path: Optional[Tuple[MoveKind, ...]]
    witness: Optional[str]
    nodes_expanded: int


def diffeo_classify(
    A: GridDiagram,
    B: GridDiagram,
    n_max: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cap: int = DEFAULT_CAP,
) -> DiffeoReport:
    """Decide equivalence of A and B up to isotopy and the diffeotopy action.

    Certificates are checked per orbit element; surviving elements get a
    full isotopy search of their image against B.  A positive verdict names
    the element and carries a path replaying its image of A to B.
    """
    if A.lens != B.lens:
        raise ValueError(f"diagrams live in different lens spaces: {A.lens} vs {B.lens}")
    cb = compute_certificates(B, cap)
    candidates: List[Tuple[str, GridDiagram]] = []
    witnesses: List[str] = []
    for label, image in diffeo_orbit(A):
        w = certificate_witness(compute_certificates(image, cap), cb)
        if w is None:
            candidates.append((label, image))
        else:
            witnesses.append(f"{label}: {w}")
    if not candidates:
        return DiffeoReport(Verdict.DISTINCT, None, None, "; ".join(witnesses), 0)
    nodes = 0
    for label, image in candidates:
        rep = isotopy_search(image, B, n_max=n_max, node_budget=node_budget, cap=cap)
        nodes += rep.nodes_expanded
        if rep.verdict is Verdict.EQUIVALENT:
            return DiffeoReport(Verdict.EQUIVALENT, label, rep.path, None, nodes)
    return DiffeoReport(Verdict.UNKNOWN, None, None, None, nodes)


@dataclass(frozen=True)
class CatalogClass:
    representative: GridDiagram
    components: int
    homology: Tuple[int, ...]
    lift_poly: Optional[LaurentPoly]
    members: int  # canonical forms merged into this class


@dataclass(frozen=True)
class Catalog:
    lens: LensSpace
    n: int
    classes: Tuple[CatalogClass, ...]
    unresolved: Tuple[Tuple[int, int], ...]  # class index pairs left unmerged

    @property
    def complete(self) -> bool:
        return not self.unresolved


def tabulate(
    ls: LensSpace,
    n: int,
    n_max: Optional[int] = None,
    node_budget: int = 200_000,
    cap: int = DEFAULT_CAP,
) -> Catalog:
    """Classify all grid-number-n diagrams by move equivalence.

    Diagrams are deduplicated to canonical forms, bucketed by certificates,
    and merged by searches allowing one extra grid level by default.  Pairs
    the search leaves unresolved keep separate classes and are reported.
    """
    if n_max is None:
        n_max = n + 1
    reps: Dict[str, GridDiagram] = {}
    for G in enumerate_diagrams(ls, n):
        dr, dx = canonical_shift(G)
        rep = translate(G, dr, dx)
        reps.setdefault(serialize(rep), rep)
    keys = sorted(reps)
    certs = {k: compute_certificates(reps[k], cap) for k in keys}

    buckets: Dict[Tuple[int, Tuple[int, ...], str], List[str]] = {}
    for k in keys:
        c = certs[k]
        sig = (
            c.components,
            c.homology,
            str(c.lift_poly) if c.lift_poly is not None else ">cap",
        )
        buckets.setdefault(sig, []).append(k)

    parent: Dict[str, str] = {k: k for k in keys}

    def find(k: str) -> str:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    stale_pairs: List[Tuple[str, str]] = []
    for sig in sorted(buckets):
        group = buckets[sig]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                ri, rj = find(group[i]), find(group[j])
                if ri == rj:
                    continue
                rep = isotopy_search(
                    reps[group[i]], reps[group[j]], n_max=n_max, node_budget=node_budget, cap=cap
                )
                if rep.verdict is Verdict.EQUIVALENT:
                    parent[ri] = rj
                else:
                    stale_pairs.append((group[i], group[j]))

    members: Dict[str, List[str]] = {}
    for k in keys:
        members.setdefault(find(k), []).append(k)
    roots = sorted(members, key=lambda r: min(members[r]))
    class_index = {r: i for i, r in enumerate(roots)}
    classes = []
    for r in roots:
        lead = min(members[r])
        c = certs[lead]
        classes.append(
            CatalogClass(
                representative=reps[lead],
                components=c.components,
                homology=c.homology,
                lift_poly=c.lift_poly,
                members=len(members[r]),
            )
        )
    unresolved = set()
    for a, b in stale_pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            i, j = sorted((class_index[ra], class_index[rb]))
            unresolved.add((i, j))
    return Catalog(ls, n, tuple(classes), tuple(sorted(unresolved)))


def render_catalog(cat: Catalog) -> str:
    lines = [f"catalog\t{cat.lens.p} {cat.lens.q} {cat.n}"]
    lines.append(f"status\t{'complete' if cat.complete else 'unresolved'}")
    lines.append(f"classes\t{len(cat.classes)}")
    for i, cl in enumerate(cat.classes):
        lines.append(f"class\t{i}")
        lines.extend(serialize(cl.representative).rstrip("\n").split("\n"))
        lines.append(f"components\t{cl.components}")
        lines.append(f"homology\t{' '.join(str(d) for d in cl.homology)}")
        lines.append(f"lift_poly\t{cl.lift_poly if cl.lift_poly is not None else '>cap'}")
        lines.append(f"members\t{cl.members}")
    for i, j in cat.unresolved:
        lines.append(f"pair\t{i} {j}")
    return "\n".join(lines) + "\n"
