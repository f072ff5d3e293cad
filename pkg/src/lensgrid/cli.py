"""Command-line front end.

Output is line-oriented `key<TAB>value`; emitted diagrams and catalogs use
the grid text / catalog formats and parse back in unchanged.  Exit codes:
0 success, 1 invalid input, 2 inapplicable move, 3 malformed flags.  The
`equiv` command reports its verdict on stdout and exits 0 either way.

Determinism: identical inputs and flags produce byte-identical output.  No
environment variable is consulted except NO_COLOR, which suppresses color
in `render --color auto`.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence, TextIO

from .core import (
    GridDiagram,
    GridFormatError,
    LensSpace,
    parse,
    render_ascii,
    require_valid,
    serialize,
    trace_components,
    validate,
)
from .diffeo import DiffeoElement, apply as diffeo_apply, diffeo_orbit, diffeotopy_case
from .equivalence import diffeo_classify, isotopy_search, render_catalog, tabulate
from .homology import homology_class, lift_grid
from .invariants import (
    DEFAULT_CAP,
    CapExceeded,
    kauffman_bracket,
    lift_planar_diagram,
    normalized_poly,
    writhe,
)
from .moves import Corner, InapplicableMove, MoveKind
from .moves import (
    CommuteCols,
    CommuteRows,
    Destabilize,
    Stabilize,
    TranslateH,
    TranslateV,
    apply_moves,
)


class MoveSpecError(Exception):
    pass


_CORNERS = {c.value: c for c in Corner}


def parse_move(spec: str) -> MoveKind:
    """Parse a move in the form emitted by `equiv` path lines."""
    parts = spec.split()
    if not parts:
        raise MoveSpecError("empty move")
    name, rest = parts[0], parts[1:]

    def ints(k: int) -> List[int]:
        if len(rest) != k:
            raise MoveSpecError(f"{name} takes {k} argument(s), got {len(rest)}")
        try:
            return [int(v) for v in rest]
        except ValueError as exc:
            raise MoveSpecError(f"{name}: {exc}") from exc

    if name == "translate_h":
        return TranslateH(ints(1)[0])
    if name == "translate_v":
        return TranslateV(ints(1)[0])
    if name == "commute_rows":
        return CommuteRows(ints(1)[0])
    if name == "commute_cols":
        return CommuteCols(ints(1)[0])
    if name == "destabilize":
        r, x = ints(2)
        return Destabilize(r, x)
    if name == "stabilize":
        if len(rest) != 2:
            raise MoveSpecError(f"stabilize takes 2 arguments, got {len(rest)}")
        try:
            m = int(rest[0])
        except ValueError as exc:
            raise MoveSpecError(f"stabilize: {exc}") from exc
        corner = _CORNERS.get(rest[1].upper())
        if corner is None:
            raise MoveSpecError(f"unknown corner {rest[1]!r}")
        return Stabilize(m, corner)
    raise MoveSpecError(f"unknown move {name!r}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_diagram(path: str) -> GridDiagram:
    return parse(_read_text(path))


def _homology_lines(G: GridDiagram, out: TextIO) -> None:
    for i, comp in enumerate(trace_components(G)):
        out.write(f"component {i}\tdelta {homology_class(G, comp)}\n")


def _path_lines(path: Sequence[MoveKind], out: TextIO) -> None:
    for mv in path:
        out.write(f"move\t{mv}\n")


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    report = validate(G)
    out.write(f"ok\t{'true' if report.ok else 'false'}\n")
    for v in report.violations:
        out.write(f"violation\t{v}\n")
    return 0 if report.ok else 1


def cmd_render(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    require_valid(G)
    if args.color == "always":
        color = True
    elif args.color == "never":
        color = False
    else:
        color = "NO_COLOR" not in os.environ and getattr(out, "isatty", lambda: False)()
    out.write(render_ascii(G, color=color))
    return 0


def cmd_move(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    moves = [parse_move(s) for s in args.moves]
    out.write(serialize(apply_moves(G, moves)))
    return 0


def cmd_diffeo(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    if args.apply is not None:
        try:
            element = DiffeoElement.from_label(args.apply)
        except ValueError as exc:
            raise MoveSpecError(str(exc)) from exc
        out.write(serialize(diffeo_apply(G, element)))
        return 0
    case = diffeotopy_case(G.lens)
    out.write(f"case\t{case.kind.value}\n")
    out.write(f"structure\t{case.structure}\n")
    out.write(f"order\t{case.order}\n")
    out.write(f"generators\t{' '.join(case.generators)}\n")
    return 0


def cmd_homology(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    require_valid(G)
    _homology_lines(G, out)
    return 0


def cmd_lift(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    require_valid(G)
    out.write(serialize(lift_grid(G)))
    return 0


def cmd_bracket(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    pd = lift_planar_diagram(G)
    bracket = kauffman_bracket(pd, cap=args.cap)
    out.write(f"crossings\t{len(pd.crossings)}\n")
    out.write(f"writhe\t{writhe(pd)}\n")
    out.write(f"bracket\t{bracket}\n")
    out.write(f"normalized\t{normalized_poly(pd, cap=args.cap)}\n")
    return 0


def cmd_equiv(args: argparse.Namespace, out: TextIO) -> int:
    A = _read_diagram(args.a)
    B = _read_diagram(args.b)
    kwargs = {"n_max": args.n_max, "cap": args.cap}
    if args.budget is not None:
        kwargs["node_budget"] = args.budget
    if args.diffeo:
        rep = diffeo_classify(A, B, **kwargs)
        out.write(f"verdict\t{rep.verdict.value}\n")
        if rep.element is not None:
            out.write(f"element\t{rep.element}\n")
        if rep.witness is not None:
            out.write(f"witness\t{rep.witness}\n")
        if rep.path is not None:
            _path_lines(rep.path, out)
        out.write(f"nodes\t{rep.nodes_expanded}\n")
        return 0
    rep2 = isotopy_search(A, B, **kwargs)
    out.write(f"verdict\t{rep2.verdict.value}\n")
    out.write(f"reason\t{rep2.reason}\n")
    if rep2.witness is not None:
        out.write(f"witness\t{rep2.witness}\n")
    if rep2.path is not None:
        _path_lines(rep2.path, out)
    out.write(f"nodes\t{rep2.nodes_expanded}\n")
    return 0


def cmd_orbit(args: argparse.Namespace, out: TextIO) -> int:
    G = _read_diagram(args.file)
    require_valid(G)
    for label, image in diffeo_orbit(G):
        out.write(f"element\t{label}\n")
        out.write(serialize(image))
        _homology_lines(image, out)
    return 0


def cmd_tabulate(args: argparse.Namespace, out: TextIO) -> int:
    ls = LensSpace(args.p, args.q)
    kwargs = {"n_max": args.n_max, "cap": args.cap}
    if args.budget is not None:
        kwargs["node_budget"] = args.budget
    out.write(render_catalog(tabulate(ls, args.n, **kwargs)))
    return 0


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the interface reserves 2 for
    inapplicable moves, so remap to 3."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lensgrid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_search_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n-max", type=int, default=None, help="largest grid number explored")
        p.add_argument("--budget", type=int, default=None, help="search node budget")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="bracket crossing cap")
        p.add_argument("--seed", type=int, default=None, help="reserved; accepted for interface stability")

    p = sub.add_parser("validate", help="check the marking constraints")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="draw the diagram")
    p.add_argument("file")
    p.add_argument("--color", choices=("auto", "always", "never"), default="auto")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("move", help="apply isotopy moves and print the result")
    p.add_argument("file")
    p.add_argument("moves", nargs="+", metavar="MOVE", help="e.g. 'commute_rows 1', 'stabilize 0 NW'")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("diffeo", help="diffeotopy case of the lens space, or apply an element")
    p.add_argument("file")
    p.add_argument("--apply", metavar="ELEMENT", default=None, help="e.g. tau, sigma+, sigma-*tau")
    p.set_defaults(func=cmd_diffeo)

    p = sub.add_parser("homology", help="per-component homology classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("lift", help="covering-space lift as a p=1 grid")
    p.add_argument("file")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("bracket", help="bracket polynomial of the lift")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="bracket crossing cap")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("equiv", help="search for a move path between two diagrams")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--diffeo", action="store_true", help="allow the diffeotopy action")
    add_search_flags(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("orbit", help="diffeotopy orbit with homology classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("tabulate", help="classify all diagrams of one grid number")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    add_search_flags(p)
    p.set_defaults(func=cmd_tabulate)

    return parser


def run(argv: Sequence[str], stdout: Optional[TextIO] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args, out)
    except MoveSpecError as exc:
        print(f"lensgrid: error: {exc}", file=sys.stderr)
        return 3
    except InapplicableMove as exc:
        print(f"lensgrid: inapplicable move: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"lensgrid: {exc}", file=sys.stderr)
        return 1
    except (GridFormatError, OSError) as exc:
        print(f"lensgrid: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"lensgrid: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
