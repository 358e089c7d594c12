"""Command line: ``szczarba {compute,hin,hom,verify,diagram}``.

Examples::

    szczarba compute --n 3 --p 0 --q 3 --seq 2,1
    szczarba hin --n 5 --subset 0,2,4
    szczarba hom --kind c --n 3 --p 0 --q 3 --format dot
    szczarba verify --max-n 6
    szczarba diagram --kind sz --n 3 --format tikz
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import serialize
from .categories import HomPoset, SubsetMorphism, enumerate_nerve, hasse_dot
from .core import DEFAULT_MAX_N, DegenerateSequenceError, hin_vertex, sz_operator_route, verify_range
from .diagrams import category_dot, category_tikz, sz_figure_dot, sz_figure_tikz

MAX_N_ENV = "SZCZARBA_MAX_N"

_FORMATS = {
    "compute": ("text", "json"),
    "hin": ("text", "json"),
    "hom": ("text", "json", "dot"),
    "verify": ("text", "json"),
    "diagram": ("dot", "tikz"),
}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _default_max_n() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_N_ENV}={raw!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="szczarba", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        p.add_argument("--format", default=default_format)
        p.add_argument("--output", "-o", type=Path, help="write here instead of stdout")

    p = sub.add_parser("compute", help="Sz of one sequence simplex via the operator formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--seq", type=_int_list, default=[], help="e.g. 2,1 (empty for the 0-simplex)")
    common(p, "text")

    p = sub.add_parser("hin", help="Hin of one subset, endpoints included")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", type=_int_list, required=True)
    common(p, "text")

    p = sub.add_parser("hom", help="one hom poset and its nerve")
    p.add_argument("--kind", choices=("c", "g"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-dim", type=int, default=1, help="largest chain dimension listed")
    p.add_argument("--all-chains", action="store_true", help="include degenerate chains")
    common(p, "text")

    p = sub.add_parser("verify", help="compare both routes on every instance up to max n")
    p.add_argument("--max-n", type=int, default=None, help=f"default ${MAX_N_ENV} or {DEFAULT_MAX_N}")
    p.add_argument("--workers", type=int, default=1)
    common(p, "text")

    p = sub.add_parser("diagram", help="category picture (c, g) or the image of Sz on a hom (sz)")
    p.add_argument("--kind", choices=("c", "g", "sz"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=None, help="defaults to n")
    common(p, "dot")
    return parser


def _check_hom(n, p, q):
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    if not 0 <= p < q <= n:
        raise UsageError(f"need 0 <= p < q <= n, got p={p}, q={q}, n={n}")


def _hom_text(poset: HomPoset, max_dim: int, nondegenerate_only: bool) -> str:
    lines = [f"{poset.label()}: {poset.size()} elements"]
    for e in poset.elements():
        lines.append(f"  {e}")
    for ell in range(1, max_dim + 1):
        chains = enumerate_nerve(poset, ell, nondegenerate_only)
        lines.append(f"{ell}-simplices: {len(chains)}")
        for c in chains:
            lines.append("  " + " <= ".join(map(str, c)))
    return "\n".join(lines) + "\n"


def render(args) -> tuple[str, int]:
    """Produce the document for parsed ``args`` and the exit status."""
    fmt = args.format
    if fmt not in _FORMATS[args.command]:
        raise UsageError(f"format {fmt!r} not available for {args.command}; choose from {_FORMATS[args.command]}")

    if args.command == "compute":
        _check_hom(args.n, args.p, args.q)
        seq = tuple(args.seq)
        if len(set(seq)) != len(seq):
            raise UsageError(f"sequence {seq} repeats an entry; only nondegenerate simplices are indexed by sequences")
        if any(not args.p < x < args.q for x in seq):
            raise UsageError(f"sequence entries must lie strictly between p={args.p} and q={args.q}")
        result = sz_operator_route(seq, args.n, args.p, args.q)
        if fmt == "json":
            return serialize.dumps("compute", result), 0
        return result.pretty() + "\n", 0

    if args.command == "hin":
        subset = args.subset
        if len(subset) < 2 or len(set(subset)) != len(subset):
            raise UsageError("subset needs at least two distinct members, endpoints included")
        _check_hom(args.n, min(subset), max(subset))
        g = hin_vertex(SubsetMorphism.from_members(args.n, subset))
        if fmt == "json":
            return serialize.dumps("hin", g), 0
        return g.pretty() + "\n", 0

    if args.command == "hom":
        _check_hom(args.n, args.p, args.q)
        if args.max_dim < 0:
            raise UsageError("max-dim must be non-negative")
        poset = HomPoset(args.kind, args.n, args.p, args.q)
        nondeg = not args.all_chains
        if fmt == "json":
            return serialize.dumps("hom", serialize.hom_to_dict(poset, args.max_dim, nondeg)), 0
        if fmt == "dot":
            return hasse_dot(poset), 0
        return _hom_text(poset, args.max_dim, nondeg), 0

    if args.command == "verify":
        max_n = args.max_n if args.max_n is not None else _default_max_n()
        if max_n < 1:
            raise UsageError(f"max-n must be >= 1, got {max_n}")
        report = verify_range(max_n, workers=args.workers)
        status = 0 if report.ok else 1
        if fmt == "json":
            return serialize.dumps("verify", report), status
        return report.text(), status

    # diagram
    q = args.n if args.q is None else args.q
    if args.kind == "sz":
        _check_hom(args.n, args.p, q)
        doc = sz_figure_tikz(args.n, args.p, q) if fmt == "tikz" else sz_figure_dot(args.n, args.p, q)
    else:
        if args.n < 1:
            raise UsageError(f"n must be >= 1, got {args.n}")
        doc = category_tikz(args.kind, args.n) if fmt == "tikz" else category_dot(args.kind, args.n)
    return doc, 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, status = render(args)
    except (UsageError, DegenerateSequenceError) as exc:
        parser.error(str(exc))
    if args.output is not None:
        args.output.write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc)
    return status


if __name__ == "__main__":
    sys.exit(main())
