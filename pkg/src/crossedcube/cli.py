"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .automorphism import generator_set, is_automorphism
from .bitaddress import MAX_DIMENSION
from .orbits import (
    DEFAULT_EXACT_CAP,
    NAIVE_CAP,
    closure_orbits,
    exact_orbits,
    naive_orbits,
    signature_partition,
)
from .p4 import contains_k4, neighborhood_p4_graph, parity_classifier
from .topology import CROSSED, HYPERCUBE, MAX_MATERIALIZED, build_cq, build_hypercube
from .verify import FAIL, Options, format_rows, lemma_id, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _check_n(n: int, hi: int, what: str) -> None:
    if not 1 <= n <= hi:
        raise UsageError(f"--n {n} out of range for {what} (1..{hi})")


def _build(kind: str, n: int):
    _check_n(n, MAX_MATERIALIZED, "graph materialization")
    return build_cq(n) if kind == CROSSED else build_hypercube(n)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    g = _build(args.kind, args.n)
    text = formats.graph_dot(g) if args.format == "dot" else formats.graph_edge_list(g)
    _emit(text, args.out)
    return EXIT_OK


def cmd_orbits(args) -> int:
    n, kind, method = args.n, args.kind, args.method
    if method == "signature":
        if kind != CROSSED:
            raise UsageError("signature method applies to crossed cubes only")
        if not 3 <= n <= MAX_DIMENSION:
            raise UsageError(f"--n {n} out of range for signature (3..{MAX_DIMENSION})")
        _emit(formats.orbit_report(signature_partition(n), kind), args.out)
        return EXIT_OK

    g = _build(kind, n)

    def exact():
        if g.order > args.exact_cap:
            raise UsageError(f"exact solver capped at {args.exact_cap} vertices (CQ_{n} has {g.order})")
        return exact_orbits(g, seeded=args.seeded, cap=args.exact_cap)

    def naive():
        if g.order > NAIVE_CAP:
            raise UsageError(f"naive enumeration capped at {NAIVE_CAP} vertices (graph has {g.order})")
        return naive_orbits(g)

    if method == "all":
        parts = {}
        if kind == CROSSED:
            if n < 3:
                raise UsageError("crossed-cube orbit comparison needs n >= 3")
            parts["closure"] = closure_orbits(n)
            parts["signature"] = signature_partition(n)
        if g.order <= args.exact_cap:
            parts["exact"] = exact()
        if g.order <= NAIVE_CAP:
            parts["naive"] = naive()
        if len(parts) < 2:
            raise UsageError("fewer than two methods available at this size")
        text, ok = formats.comparison_report(parts, kind)
        _emit(text, args.out)
        return EXIT_OK if ok else EXIT_FAIL

    if method == "closure":
        if kind != CROSSED or n < 3:
            raise UsageError("closure method needs a crossed cube with n >= 3")
        p = closure_orbits(n)
    elif method == "exact":
        p = exact()
    else:
        p = naive()
    _emit(formats.orbit_report(p, kind), args.out)
    return EXIT_OK


def cmd_p4(args) -> int:
    n, v = args.n, args.vertex
    if n < 5:
        raise UsageError("P4/K4 parity analysis holds for n >= 5")
    g = _build(CROSSED, n)
    if not 0 <= v < g.order:
        raise UsageError(f"--vertex {v} outside CQ_{n}")
    h = neighborhood_p4_graph(g, v)
    if args.format == "edges":
        text = formats.p4_edge_list(h)
    elif args.format == "dot":
        text = formats.p4_dot(h)
    else:
        text = "\n".join([
            f"host=crossed n={n} center={v}",
            f"vertices={len(h.vertices)}",
            "members=" + " ".join(map(str, h.vertices)),
            f"edges={len(h.edges)}",
            "k4=" + ("yes" if contains_k4(h) else "no"),
            f"parity={parity_classifier(g, v)}",
        ]) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_maps(args) -> int:
    if args.check:
        with open(args.check) as fh:
            maps = formats.read_vertex_maps(fh.read())
        lines, ok = [], True
        for m in maps:
            good = is_automorphism(_build(CROSSED, m.n), m)
            ok &= good
            lines.append(f"label={m.label or '-'} n={m.n} automorphism={'yes' if good else 'no'}")
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK if ok else EXIT_FAIL
    if args.n is None:
        raise UsageError("maps needs --n or --check")
    _check_n(args.n, MAX_MATERIALIZED, "vertex maps")
    if args.n < 3:
        raise UsageError("generator set defined for n >= 3")
    _emit(formats.vertex_map_text(generator_set(args.n)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n is not None:
        ns = [args.n]
    else:
        ns = list(range(args.n_min, args.n_max + 1))
    if not ns or ns[0] < 3 or ns[-1] > MAX_MATERIALIZED:
        raise UsageError(f"verify needs 3 <= n <= {MAX_MATERIALIZED}")
    lemma = None
    if args.lemma is not None:
        try:
            lemma = lemma_id(args.lemma)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    opts = Options(exact=args.exact, exact_cap=args.exact_cap, p4_max=args.p4_max, lemma=lemma)
    rows = run_all(ns, opts, threads=args.threads)
    _emit(format_rows(rows, show_details=args.details or lemma is not None), args.out)
    return EXIT_FAIL if any(r.status == FAIL for r in rows) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossedcube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--threads", type=int, default=1)
        return p

    p = common(sub.add_parser("gen", help="write a crossed cube or hypercube"))
    p.add_argument("--kind", choices=[CROSSED, HYPERCUBE], default=CROSSED)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["edges", "dot"], default="edges")
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("orbits", help="vertex-orbit report"))
    p.add_argument("--kind", choices=[CROSSED, HYPERCUBE], default=CROSSED)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["closure", "exact", "signature", "naive", "all"], default="all")
    p.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--seeded", action="store_true", help="seed refinement with the K4 parity classes")
    p.set_defaults(func=cmd_orbits)

    p = common(sub.add_parser("p4", help="P4-graph of a vertex neighbourhood"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--format", choices=["report", "edges", "dot"], default="report")
    p.set_defaults(func=cmd_p4)

    p = common(sub.add_parser("maps", help="write the explicit generators or check a map file"))
    p.add_argument("--n", type=int)
    p.add_argument("--check", metavar="FILE")
    p.set_defaults(func=cmd_maps)

    p = common(sub.add_parser("verify", help="replay the lemmas as PASS/FAIL checks"))
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--lemma", help="only this check, e.g. 7, cor2, thm2")
    p.add_argument("--exact", action="store_true", help="run the exact solver where within cap")
    p.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--p4-max", type=int, default=10, help="largest n for P4/K4 sweeps")
    p.add_argument("--details", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
