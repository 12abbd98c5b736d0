"""Per-dimension replay of the crossed-cube orbit results as PASS/FAIL rows."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import automorphism as aut
from .orbits import (
    DEFAULT_EXACT_CAP,
    closure_orbits,
    enumerate_automorphisms,
    orbit_count_formula,
    orbit_size_formula,
    signature,
    signature_partition,
    solve_orbits,
)
from .p4 import k4_witness_even, parity_coloring
from .topology import build_cq, is_edge_cq, witness_dimension

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"

# known small orbit counts
SMALL_COUNTS = {3: 1, 4: 1, 5: 2, 6: 2}

CHECK_ORDER = [
    "Def 2.2", "Lemma 1", "Lemma 2", "Lemma 3", "Lemma 4", "Lemma 5", "Lemma 6",
    "Corollary 1", "Lemma 7", "Lemma 8", "Corollary 2", "Lemma 9", "Lemma 10",
    "Lemma 11", "Lemma 12", "Lemma 13", "Lemma 14", "Lemma 15", "Theorem 1",
    "Theorem 2",
]


@dataclass
class Options:
    exact: bool = False
    exact_cap: int = DEFAULT_EXACT_CAP
    p4_max: int = 10
    pairwise_max: int = 6
    lemma: str | None = None


@dataclass
class Row:
    n: int
    check: str
    status: str
    description: str
    details: list[str] = field(default_factory=list)


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def lemma_id(token: str) -> str:
    """Normalize '7', 'lemma7', 'L7', 'cor2', 'thm2' to a CHECK_ORDER entry."""
    t = token.lower().replace(" ", "").replace("_", "")
    for prefix, name in (("corollary", "Corollary"), ("cor", "Corollary"), ("c", "Corollary"),
                         ("theorem", "Theorem"), ("thm", "Theorem"), ("t", "Theorem"),
                         ("lemma", "Lemma"), ("l", "Lemma"), ("def", "Def")):
        if t.startswith(prefix) and t[len(prefix):]:
            rest = t[len(prefix):]
            return f"{name} {rest}"
    if t.isdigit():
        return f"Lemma {t}"
    raise ValueError(f"unknown check {token!r}")


def run_checks(n: int, opts: Options) -> list[Row]:
    g = build_cq(n)
    order = 1 << n
    rows: list[Row] = []

    def add(check, ok, desc, details=None):
        rows.append(Row(n, check, ok if isinstance(ok, str) else _status(ok), desc, details or []))

    regular = all(g.degree(v) == n for v in g.vertices()) and g.order == order
    symmetric = all(g.has_edge(v, u) for u, v in g.edges())
    pairwise = True
    if n <= opts.pairwise_max:
        pairwise = all(
            g.has_edge(u, v) == is_edge_cq(u, v, n) for u, v in combinations(range(order), 2)
        )
    add("Def 2.2", regular and symmetric and pairwise,
        "CQ_n is n-regular on 2^n vertices; neighbour construction matches the pairwise edge rule")

    gens = aut.generator_set(n)
    by_label = {m.label: m for m in gens}
    odd = [by_label[f"f{k}"] for k in range(1, n, 2)]
    add("Lemma 1", all(aut.is_automorphism(g, m) for m in odd),
        "flipping any odd bit k < n is an automorphism")
    add("Lemma 2", aut.is_automorphism(g, aut.gen_flip(n - 1, n)),
        "flipping the top bit n-1 is an automorphism")
    add("Lemma 3", aut.is_automorphism(g, aut.gen_flip(n - 2, n)),
        "flipping bit n-2 is an automorphism")
    if n % 2:
        add("Lemma 4", aut.is_automorphism(g, aut.gen_conditional_odd_n(n)),
            "odd n: flip bit n-3, and bit n-2 when the top bit is 1, is an automorphism")
    elif n >= 4:
        add("Lemma 5", aut.is_automorphism(g, aut.gen_conditional_even_n(n)),
            "even n: flip bit n-4, and bit n-3 when the top two bits differ, is an automorphism")
    add("Lemma 6", all(aut.check_involution(m) for m in gens),
        "every explicit generator is an involution")
    add("Corollary 1",
        all(aut.check_involution(m) and all(m(u) != u for u in range(order)) for m in gens),
        "every explicit generator pairs the vertices into 2-element orbits")

    if n >= 5:
        details, ok = [], True
        for k in range(0, n - 2, 2):
            u, v = aut.counterexample_even_flip(k, n, g)
            ok &= g.has_edge(u, v) and not g.has_edge(u ^ (1 << k), v ^ (1 << k))
            details.append(f"k={k}: edge ({u}, {v}) maps to non-edge ({u ^ (1 << k)}, {v ^ (1 << k)})")
        even_top = n - 1 if n % 2 else n - 2
        ok &= aut.is_automorphism(g, aut.gen_flip(even_top, n))
        add("Lemma 7", ok, "flipping an even bit is an automorphism only for k in {n-2, n-1}", details)

    closure = closure_orbits(n, gens)
    size = orbit_size_formula(n)
    add("Lemma 8",
        closure.count == orbit_count_formula(n) and all(s == size for s in closure.sizes),
        f"generator closure has 2^(ceil(n/2)-2) = {orbit_count_formula(n)} blocks of size {size}",
        [f"closure blocks: {closure.count}"])

    exact = None
    if opts.exact and order <= opts.exact_cap:
        exact = solve_orbits(g, cap=opts.exact_cap)

    if n in SMALL_COUNTS:
        if exact is not None:
            add("Corollary 2", exact.partition.count == SMALL_COUNTS[n],
                f"exact orbit count is {SMALL_COUNTS[n]}", [f"exact: {exact.partition.count}"])
        else:
            add("Corollary 2", closure.count == SMALL_COUNTS[n],
                f"generator closure gives {SMALL_COUNTS[n]} orbits (upper bound; use --exact for equality)",
                [f"closure: {closure.count}"])

    p4_range = 5 <= n <= opts.p4_max
    coloring = parity_coloring(g) if p4_range else None
    if p4_range:
        evens_ok = all(coloring[v] == 0 for v in range(0, order, 2))
        witness_ok = True
        for u in range(0, order, 2):
            try:
                k4_witness_even(u, n, g)
            except AssertionError:
                witness_ok = False
        add("Lemma 9", evens_ok and witness_ok,
            "every even vertex has a K4 in the P4-graph of its neighbourhood (flip-0..3 witness)")

    lemma10 = lemma11 = True
    for u, v in g.edges():
        x = witness_dimension(u, v)
        for k in range(n // 2):
            bu, bv = (u >> 2 * k) & 3, (v >> 2 * k) & 3
            if bu == bv == 0b01 and x >= 2 * k:
                lemma10 = False
            if {bu, bv} == {0b01, 0b10}:
                lemma11 = False
    add("Lemma 10", lemma10, "two vertices sharing block 01 at k are never adjacent along a dimension >= 2k")
    add("Lemma 11", lemma11, "a vertex with block 01 and one with block 10 at the same k are never adjacent")

    if p4_range:
        add("Lemma 12", all(coloring[v] == 1 for v in range(1, order, 2)),
            "no odd vertex has a K4 in the P4-graph of its neighbourhood")

    if n >= 5:
        maps = list(gens) + (exact.automorphisms if exact is not None else [])
        ok = all(aut.preserves_parity(m) for m in maps)
        if coloring is not None:
            ok &= all(coloring[v] == v & 1 for v in range(order))
        add("Lemma 13", ok, "automorphisms map even vertices to even and odd to odd",
            [f"maps checked: {len(maps)}"])

        maps = list(gens)
        if exact is not None:
            maps = [aut.VertexMap(n, tuple(p)) for p in enumerate_automorphisms(g, cap=opts.exact_cap)]
        add("Lemma 14", all(aut.preserves_low_neighbors(g, m) for m in maps),
            "automorphisms send 0th/1st neighbours of u to 0th/1st neighbours of its image",
            [f"maps checked: {len(maps)}" + (" (full group)" if exact is not None else " (generators)")])

    if n >= 7:
        small = build_cq(n - 2)
        maps = list(gens) + (exact.automorphisms if exact is not None else [])
        ok = True
        for m in maps:
            try:
                ok &= aut.is_automorphism(small, aut.reduce(m))
            except ValueError:
                ok = False
        ok &= aut.reduce(aut.VertexMap.identity(n)).image == tuple(range(order >> 2))
        add("Lemma 15", ok, "v -> m(4v) // 4 turns an automorphism of CQ_n into one of CQ_(n-2)",
            [f"maps reduced: {len(maps)}"])

    sig = signature_partition(n)
    if n >= 5:
        if exact is not None:
            add("Theorem 1", exact.partition.count > 1, "CQ_n is not vertex-transitive for n >= 5",
                [f"exact: {exact.partition.count}"])
        else:
            add("Theorem 1", SKIP, "CQ_n is not vertex-transitive for n >= 5 (needs --exact)")

    ok = closure == sig and sig.count == orbit_count_formula(n)
    details = [f"closure={closure.count} signature={sig.count} formula={orbit_count_formula(n)}"]
    if exact is not None:
        ok &= exact.partition == closure
        ok &= all(signature(m(u), n) == signature(u, n) for m in exact.automorphisms for u in range(order))
        details.append(f"exact={exact.partition.count} (searches={exact.searches})")
        desc = "exact orbits = generator closure = even-bit signature classes, 2^(ceil(n/2)-2) of them"
    else:
        desc = "generator closure = even-bit signature classes, 2^(ceil(n/2)-2) of them (upper bound side)"
    add("Theorem 2", ok, desc, details)

    if opts.lemma is not None:
        rows = [r for r in rows if r.check == opts.lemma]
    return rows


def run_all(ns: list[int], opts: Options, threads: int = 1) -> list[Row]:
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        per_n = list(pool.map(lambda n: run_checks(n, opts), ns))
    return [row for rows in per_n for row in rows]


def format_rows(rows: list[Row], show_details: bool = False) -> str:
    lines = [f"{'n':>3}  {'check':<12} {'result':<6}  description"]
    for r in rows:
        lines.append(f"{r.n:>3}  {r.check:<12} {r.status:<6}  {r.description}")
        if show_details or r.status == FAIL:
            lines += [f"{'':>3}  {'':<12} {'':<6}    {d}" for d in r.details]
    passed = sum(r.status == PASS for r in rows)
    failed = sum(r.status == FAIL for r in rows)
    skipped = sum(r.status == SKIP for r in rows)
    lines.append(f"summary: {passed} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"
