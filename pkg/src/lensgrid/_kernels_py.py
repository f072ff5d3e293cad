"""Pure-Python kernels: canonical-translation argmin and bracket state sum.

Mirrors lensgrid._ext; lensgrid.kernels picks whichever is importable.
Interfaces are deliberately flat (ints and lists) so the two backends stay
interchangeable and easy to compare.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

BACKEND = "python"


def min_translation(
    n: int, p: int, q: int, marks: Sequence[Tuple[int, int, int]]
) -> Tuple[int, int]:
    """Translation (dr, dx) whose serialization body is lexicographically least.

    marks holds (row, column, t) with t = 0 for O and 1 for X, matching the
    byte order '.' < 'O' < 'X'.  A sparse key of sorted (cell position, t)
    pairs compares bodies without materializing them: at the first index
    where two keys differ, the key whose entry sits later in the body is the
    smaller body (the other shows a marking where this one shows '.').
    """
    width = p * n
    qn = q * n
    best_key: List[Tuple[int, int]] | None = None
    best = (0, 0)
    for dr in range(n):
        for dx in range(width):
            key = []
            for r, x, t in marks:
                passes = (r + dr) // n
                pos = ((r + dr) % n) * width + (x + dx + passes * qn) % width
                key.append((pos, t))
            key.sort()
            if best_key is None or _body_less(key, best_key):
                best_key = key
                best = (dr, dx)
    return best


def _body_less(a: List[Tuple[int, int]], b: List[Tuple[int, int]]) -> bool:
    for (pa, ta), (pb, tb) in zip(a, b):
        if pa != pb:
            return pa > pb
        if ta != tb:
            return ta < tb
    return False


def bracket_counts(c: int, quads: Sequence[int], m: int) -> List[List[int]]:
    """State-sum tallies for a c-crossing diagram with m strand classes.

    quads holds 4 class ids per crossing (up, down, left, right strand ends;
    the vertical strand is in front).  The A smoothing joins up-right and
    down-left, the B smoothing up-left and down-right.  Returns counts[L][b]
    = number of states with b B-smoothings whose strands close into L loops.

    Smoothings are explored depth-first so union-find work on a shared
    prefix of crossings is done once; merges are undone on backtrack.
    """
    parent = list(range(m))
    size = [1] * m
    counts = [[0] * (c + 1) for _ in range(m + 1)]
    undo: List[int] = []
    comp = m

    def find(a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    def union(a: int, b: int) -> int:
        ra, rb = find(a), find(b)
        if ra == rb:
            return 0
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        undo.append(rb)
        return 1

    def rollback(k: int) -> None:
        for _ in range(k):
            rb = undo.pop()
            ra = parent[rb]
            parent[rb] = rb
            size[ra] -= size[rb]

    def dfs(i: int, b: int) -> None:
        nonlocal comp
        if i == c:
            counts[comp][b] += 1
            return
        up, down, left, right = quads[4 * i : 4 * i + 4]
        k = union(up, right) + union(down, left)
        comp -= k
        dfs(i + 1, b)
        comp += k
        rollback(k)
        k = union(up, left) + union(down, right)
        comp -= k
        dfs(i + 1, b + 1)
        comp += k
        rollback(k)

    dfs(0, 0)
    return counts
