"""Diffeotopy group of L(p,q) and its action on grid diagrams.

For p >= 2 the group of diffeomorphisms up to isotopy is:

    p = 2                     : Z2, generated by sigma-
    q = +-1 mod p, p != 2     : Z2, generated by tau
    q^2 = +1, q != +-1 mod p  : Z2 + Z2, generated by tau and sigma+
    q^2 = -1 mod p, p != 2    : Z4, generated by sigma- (sigma-^2 = tau)
    otherwise                 : Z2, generated by tau

On markings (0-based; j = annulus, k = column-cell, i = row, x = row-cell):

    tau     : (j, k) -> (n-1-j, n*p-1-k)                 always defined
    sigma+  : row cell (i, x) -> column cell (i, x)      needs q^2 = +1 mod p
    sigma-  : row cell (i, x) -> column cell (n-1-i, x)  needs q^2 = -1 mod p

Mark types are preserved; the induced homology action is [tau G] = -[G] and
[sigma+- G] = q[G] mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from .core import (
    Cell,
    GridDiagram,
    LensSpace,
    Marking,
    col_cell_to_rect,
    rect_to_col_cell,
    require_valid,
)
from .moves import InapplicableMove


class CaseKind(Enum):
    P2 = "p = 2"
    Q_IS_PM1 = "q = +-1 mod p"
    QSQ_P1 = "q^2 = +1, q != +-1"
    QSQ_M1 = "q^2 = -1"
    GENERIC = "generic"


@dataclass(frozen=True)
class DiffeotopyCase:
    kind: CaseKind
    structure: str
    order: int
    generators: Tuple[str, ...]


def diffeotopy_case(ls: LensSpace) -> DiffeotopyCase:
    p, q = ls.p, ls.q
    if p == 1:
        raise ValueError("diffeotopy classification applies to p >= 2")
    if p == 2:
        return DiffeotopyCase(CaseKind.P2, "Z2", 2, ("sigma-",))
    if q == 1 or q == p - 1:
        return DiffeotopyCase(CaseKind.Q_IS_PM1, "Z2", 2, ("tau",))
    if (q * q) % p == 1:
        return DiffeotopyCase(CaseKind.QSQ_P1, "Z2+Z2", 4, ("tau", "sigma+"))
    if (q * q) % p == p - 1:
        return DiffeotopyCase(CaseKind.QSQ_M1, "Z4", 4, ("sigma-",))
    return DiffeotopyCase(CaseKind.GENERIC, "Z2", 2, ("tau",))


def sigma_plus_applicable(ls: LensSpace) -> bool:
    return (ls.q * ls.q) % ls.p == 1 % ls.p


def sigma_minus_applicable(ls: LensSpace) -> bool:
    return (ls.q * ls.q) % ls.p == (ls.p - 1) % ls.p


def tau(G: GridDiagram) -> GridDiagram:
    """Rotate both solid-torus coordinates: (j,k) -> (n-1-j, np-1-k)."""
    require_valid(G)
    n, p = G.n, G.lens.p
    marks: List[Marking] = []
    for cell, mark in G.markings:
        j, k = rect_to_col_cell(G.lens, n, cell)
        marks.append((col_cell_to_rect(G.lens, n, n - 1 - j, n * p - 1 - k), mark))
    return GridDiagram(G.lens, n, tuple(marks))


def _rows_to_columns(G: GridDiagram, flip: bool) -> GridDiagram:
    n = G.n
    marks: List[Marking] = []
    for cell, mark in G.markings:
        j = n - 1 - cell.r if flip else cell.r
        marks.append((col_cell_to_rect(G.lens, n, j, cell.x), mark))
    return GridDiagram(G.lens, n, tuple(marks))


def sigma_plus(G: GridDiagram) -> GridDiagram:
    """Exchange the two solid tori: row cell (i, x) -> column cell (i, x)."""
    require_valid(G)
    if not sigma_plus_applicable(G.lens):
        raise InapplicableMove(f"sigma+ needs q^2 = +1 mod p, not satisfied in {G.lens}")
    return _rows_to_columns(G, flip=False)


def sigma_minus(G: GridDiagram) -> GridDiagram:
    """Orientation-reversing exchange: row cell (i, x) -> column cell (n-1-i, x)."""
    require_valid(G)
    if not sigma_minus_applicable(G.lens):
        raise InapplicableMove(f"sigma- needs q^2 = -1 mod p, not satisfied in {G.lens}")
    return _rows_to_columns(G, flip=True)


_LETTERS = ("tau", "sigma+", "sigma-")


@dataclass(frozen=True)
class DiffeoElement:
    """Word in tau/sigma+/sigma-, reduced by tau^2 = sigma+^2 = 1,
    sigma-^2 = tau, and commutativity."""

    word: Tuple[str, ...]

    def __post_init__(self) -> None:
        for letter in self.word:
            if letter not in _LETTERS:
                raise ValueError(f"unknown generator {letter!r}")

    @classmethod
    def identity(cls) -> "DiffeoElement":
        return cls(())

    @classmethod
    def from_label(cls, label: str) -> "DiffeoElement":
        if label == "id":
            return cls.identity()
        return cls(tuple(label.split("*")))

    def reduced(self) -> "DiffeoElement":
        minus = self.word.count("sigma-")
        plus = self.word.count("sigma+") % 2
        taus = (self.word.count("tau") + minus // 2) % 2
        word: List[str] = []
        if minus % 2:
            word.append("sigma-")
        if plus:
            word.append("sigma+")
        if taus:
            word.append("tau")
        return DiffeoElement(tuple(word))

    def label(self) -> str:
        w = self.reduced().word
        return "*".join(w) if w else "id"

    def __mul__(self, other: "DiffeoElement") -> "DiffeoElement":
        return DiffeoElement(self.word + other.word).reduced()


def apply(G: GridDiagram, e: DiffeoElement) -> GridDiagram:
    """Apply the word letters right-to-left, as function composition."""
    for letter in reversed(e.word):
        if letter == "tau":
            G = tau(G)
        elif letter == "sigma+":
            G = sigma_plus(G)
        else:
            G = sigma_minus(G)
    return G


_ORBIT_LABELS = {
    CaseKind.P2: ("id", "sigma-"),
    CaseKind.Q_IS_PM1: ("id", "tau"),
    CaseKind.QSQ_P1: ("id", "tau", "sigma+", "sigma+*tau"),
    CaseKind.QSQ_M1: ("id", "sigma-", "tau", "sigma-*tau"),
    CaseKind.GENERIC: ("id", "tau"),
}


def orbit_labels(ls: LensSpace) -> Tuple[str, ...]:
    return _ORBIT_LABELS[diffeotopy_case(ls).kind]


def diffeo_orbit(G: GridDiagram) -> Tuple[Tuple[str, GridDiagram], ...]:
    """The labeled orbit of G under the diffeotopy group of its lens space."""
    return tuple(
        (label, apply(G, DiffeoElement.from_label(label))) for label in orbit_labels(G.lens)
    )


def expected_homology_action(e: DiffeoElement, delta: int, ls: LensSpace) -> int:
    """Predicted class of e(K) given [K] = delta: tau negates, sigma multiplies by q."""
    w = e.reduced().word
    factor = 1
    if "sigma-" in w or "sigma+" in w:
        factor *= ls.q
    if "tau" in w:
        factor *= -1
    return (factor * delta) % ls.p
