"""Exit criteria, one test each; results are echoed in the terminal summary."""

import time

import pytest

from conftest import ACCEPTANCE_LINES, cq, qn
from crossedcube.automorphism import (
    VertexMap,
    check_involution,
    counterexample_even_flip,
    generator_set,
    is_automorphism,
    preserves_low_neighbors,
    reduce,
)
from crossedcube.orbits import (
    closure_orbits,
    enumerate_automorphisms,
    exact_orbits,
    naive_orbits,
    orbit_count_formula,
    orbit_size_formula,
    signature_partition,
    solve_orbits,
)
from crossedcube.p4 import neighborhood_p4_graph, parity_coloring
from crossedcube.topology import build_cq, build_hypercube, path_graph, random_graph


def record(number, title, ok, detail=""):
    line = f"AC{number:<2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_ac01_small_orbit_counts():
    start = time.perf_counter()
    counts = [exact_orbits(build_cq(n)).count for n in (3, 4, 5, 6)]
    elapsed = time.perf_counter() - start
    record(1, "exact orbit counts for n=3..6 are 1,1,2,2 within 60 s",
           counts == [1, 1, 2, 2] and elapsed < 60, f"counts={counts} t={elapsed:.2f}s")


def test_ac02_formula_closure_signature():
    start = time.perf_counter()
    ok, bad = True, []
    for n in range(3, 13):
        c, s = closure_orbits(n), signature_partition(n)
        good = (
            c.count == s.count == orbit_count_formula(n)
            and all(size == orbit_size_formula(n) for size in c.sizes)
            and c == s
        )
        if not good:
            bad.append(n)
        ok &= good
    elapsed = time.perf_counter() - start
    record(2, "closure = signature = 2^(ceil(n/2)-2) blocks of size 2^(floor(n/2)+2), n=3..12, within 30 s",
           ok and elapsed < 30, f"bad={bad} t={elapsed:.2f}s")


@pytest.mark.parametrize("n", [5, 6, 7])
def test_ac03_exact_equals_closure(n):
    start = time.perf_counter()
    ok = exact_orbits(cq(n)) == closure_orbits(n)
    elapsed = time.perf_counter() - start
    limit = 600 if n == 7 else 60
    record(3, f"exact_orbits(CQ_{n}) equals closure_orbits element-for-element",
           ok and elapsed < limit, f"t={elapsed:.2f}s")


def test_ac04_generators():
    failures = []
    for n in range(3, 13):
        g = cq(n)
        gens = generator_set(n)
        if len(gens) != n // 2 + 2:
            failures.append((n, "count"))
        for m in gens:
            if not is_automorphism(g, m):
                failures.append((n, m.label, "aut"))
            if not check_involution(m):
                failures.append((n, m.label, "involution"))
    record(4, "all floor(n/2)+2 generators are involutive automorphisms, n=3..12",
           not failures, f"failures={failures}")


def test_ac05_even_flip_counterexamples():
    checked, failures = 0, []
    for n in range(5, 11):
        g = cq(n)
        for k in range(0, n - 2, 2):
            u, v = counterexample_even_flip(k, n, g)
            checked += 1
            if not g.has_edge(u, v) or g.has_edge(u ^ (1 << k), v ^ (1 << k)):
                failures.append((n, k))
    record(5, "every even k < n-2 has a verified edge -> non-edge witness, n=5..10",
           not failures, f"witnesses={checked} failures={failures}")


def test_ac06_p4_parity_invariant():
    mismatches = {}
    for n in (5, 6, 7):
        coloring = parity_coloring(cq(n))
        mismatches[n] = sum(c != (v & 1) for v, c in enumerate(coloring))
    h = neighborhood_p4_graph(cq(7), 1)
    rest = [7, 11, 19, 35, 67]
    fixture_ok = (
        h.vertices == (0, 3, 7, 11, 19, 35, 67)
        and all(h.has_edge(hub, x) for hub in (0, 3) for x in h.vertices if x != hub)
        and not any(h.has_edge(a, b) for i, a in enumerate(rest) for b in rest[i + 1:])
        and len(h.edges) == 11
    )
    record(6, "K4 classifier equals bit-0 parity on CQ_5..CQ_7; N(1) P4-graph in CQ_7 reproduced",
           not any(mismatches.values()) and fixture_ok, f"mismatches={mismatches}")


def test_ac07_low_neighbour_preservation():
    total, bad = 0, 0
    for n in (5, 6):
        g = cq(n)
        maps = list(solve_orbits(g).automorphisms)
        maps += [VertexMap(n, tuple(p)) for p in enumerate_automorphisms(g)]
        for m in maps:
            total += 1
            bad += not preserves_low_neighbors(g, m)
    record(7, "every automorphism found by the solver on CQ_5, CQ_6 preserves 0th/1st neighbours",
           bad == 0 and total > 0, f"maps={total} exceptions={bad}")


def test_ac08_reduction():
    g5 = cq(5)
    results = [is_automorphism(g5, reduce(m)) for m in generator_set(7)]
    identity_ok = reduce(VertexMap.identity(7)).image == tuple(range(32))
    record(8, "reduce of every CQ_7 generator is an automorphism of CQ_5; identity reduces to identity",
           all(results) and identity_ok, f"generators={len(results)}")


def test_ac09_naive_oracle_agreement():
    fixtures = {
        "CQ_3": cq(3),
        "Q_2": qn(2),
        "Q_3": qn(3),
        "P_3": path_graph(3),
        "random(8, 0.5, seed=7)": random_graph(8, 0.5, seed=7),
    }
    disagree = [name for name, g in fixtures.items() if naive_orbits(g) != exact_orbits(g)]
    record(9, "naive_orbits = exact_orbits on all fixture graphs with <= 8 vertices",
           not disagree, f"disagree={disagree}")


def test_ac10_hypercube_baseline():
    counts = [exact_orbits(build_hypercube(n)).count for n in range(2, 6)]
    record(10, "exact_orbits(Q_n) is a single block for n=2..5", counts == [1, 1, 1, 1], f"counts={counts}")
