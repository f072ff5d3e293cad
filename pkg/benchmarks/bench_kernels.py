"""Timing comparison of the kernel backends.

Runs the two hot kernels (canonical-translation argmin, bracket state sum)
over workloads drawn from the library's own random corpus, once per
backend, and prints one table.  Usage:

    python3 benchmarks/bench_kernels.py [--repeats N] [--seed S]

The compiled backend is skipped with a note when the extension is not
built.
"""

from __future__ import annotations

import argparse
import random
import time

from lensgrid.core import LensSpace, MarkType
from lensgrid.corpus import random_diagram
from lensgrid.invariants import lift_planar_diagram, planar_diagram
from lensgrid.kernels import BACKEND, available_backends, get_backend

LENSES = [
    LensSpace(1, 0),
    LensSpace(2, 1),
    LensSpace(4, 1),
    LensSpace(5, 2),
    LensSpace(7, 2),
]


def _marks(G):
    return [(c.r, c.x, 1 if t is MarkType.X else 0) for c, t in G.markings]


def build_workloads(seed: int):
    """(translation args, bracket args) drawn from random diagrams.

    Bracket inputs are capped at 14 crossings so the pure-Python state
    sum stays in the tens of milliseconds per call.
    """
    rng = random.Random(seed)
    translation = []
    bracket = []
    for ls in LENSES:
        for _ in range(60):
            n = rng.randrange(2, 6) if ls.p == 1 else rng.randrange(1, 4)
            G = random_diagram(ls, n, rng)
            translation.append((G.n, G.lens.p, G.lens.q, _marks(G)))
            pd = planar_diagram(G) if ls.p == 1 else lift_planar_diagram(G)
            c = len(pd.crossings)
            if 0 < c <= 14:
                bracket.append((c, list(pd.quads), pd.n_strand_classes))
    return translation, bracket


def best_of(fn, items, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in items:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5, help="best-of repeat count")
    ap.add_argument("--seed", type=int, default=7, help="workload seed")
    args = ap.parse_args()

    translation, bracket = build_workloads(args.seed)
    print(f"active backend: {BACKEND}")
    print(f"workloads: {len(translation)} translations, {len(bracket)} brackets")
    print()

    rows = []
    for kernel, items in (("min_translation", translation), ("bracket_counts", bracket)):
        times = {}
        for name in ("python", "cython"):
            if name not in available_backends():
                times[name] = None
                continue
            fn = getattr(get_backend(name), kernel)
            times[name] = best_of(fn, items, args.repeats)
        rows.append((kernel, times))

    header = f"{'kernel':<16} {'python':>12} {'cython':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for kernel, times in rows:
        py = times["python"]
        cy = times["cython"]
        cy_s = f"{cy * 1e3:9.1f} ms" if cy is not None else "not built"
        speed = f"{py / cy:8.1f}x" if cy else "-"
        print(f"{kernel:<16} {py * 1e3:9.1f} ms {cy_s:>12} {speed:>9}")


if __name__ == "__main__":
    main()
