import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cq, qn
from oracles import vf2_automorphisms, vf2_orbits
from crossedcube.automorphism import VertexMap, generator_set, is_automorphism
from crossedcube.orbits import (
    OrbitPartition,
    UnionFind,
    closure_orbits,
    enumerate_automorphisms,
    exact_orbits,
    individualize,
    naive_orbits,
    orbit_count_formula,
    orbit_size_formula,
    refine,
    signature,
    signature_partition,
    solve_orbits,
)
from crossedcube.topology import Graph, path_graph, random_graph


def test_union_find_roots_are_minimums():
    uf = UnionFind(6)
    uf.union(4, 2)
    uf.union(5, 4)
    uf.union(3, 1)
    assert uf.classes() == [[0], [1, 3], [2, 4, 5]]
    assert not uf.union(2, 5)


@pytest.mark.parametrize("n, count", [(3, 1), (4, 1), (5, 2), (6, 2), (9, 8)])
def test_formula(n, count):
    assert orbit_count_formula(n) == count


def test_formula_range():
    with pytest.raises(ValueError):
        orbit_count_formula(2)


@pytest.mark.parametrize("u, n, sig", [(1, 7, (1, 0)), (4, 7, (0, 1)), (5, 3, ()), (0, 4, ())])
def test_signature(u, n, sig):
    assert signature(u, n) == sig


@pytest.mark.parametrize("n, count, size", [(5, 2, 16), (7, 4, 32), (8, 4, 64), (3, 1, 8)])
def test_signature_partition(n, count, size):
    p = signature_partition(n)
    assert p.count == count and set(p.sizes) == {size}
    assert p.is_valid(1 << n)
    for block in p:
        assert len({signature(u, n) for u in block}) == 1


def test_signature_partition_large_n_is_lazy():
    p = signature_partition(28)
    assert p.count == 4096
    assert set(p.sizes) == {1 << 16}
    block = p.blocks[5]
    assert block[0] == 17 and 17 in block and 16 not in block
    assert list(block[:3]) == sorted(block[:3])


@pytest.mark.parametrize("n, count, size", [(3, 1, 8), (5, 2, 16), (7, 4, 32)])
def test_closure_orbits(n, count, size):
    p = closure_orbits(n)
    assert p.count == count and set(p.sizes) == {size}


@pytest.mark.parametrize("n", range(3, 13))
def test_closure_equals_signature(n):
    c, s = closure_orbits(n), signature_partition(n)
    assert c == s
    assert c.count == orbit_count_formula(n)
    assert set(c.sizes) == {orbit_size_formula(n)}


def test_exact_cq5_blocks_are_parity_classes():
    p = exact_orbits(cq(5))
    assert [list(b) for b in p] == [list(range(0, 32, 2)), list(range(1, 32, 2))]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_exact_counts_small(n):
    assert exact_orbits(cq(n)).count == {3: 1, 4: 1, 5: 2, 6: 2}[n]


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_exact_equals_closure_and_signature(n):
    p = exact_orbits(cq(n), cap=1 << n)
    assert p == closure_orbits(n) == signature_partition(n)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_seeded_refinement_gives_same_partition(n):
    assert exact_orbits(cq(n), seeded=True) == exact_orbits(cq(n))


def test_seeded_requires_crossed_cube():
    with pytest.raises(ValueError):
        exact_orbits(qn(4), seeded=True)


def test_exact_cap():
    with pytest.raises(ValueError):
        exact_orbits(cq(8))
    with pytest.raises(ValueError):
        exact_orbits(cq(5), cap=16)


@pytest.mark.parametrize("n", range(2, 6))
def test_hypercube_vertex_transitive(n):
    assert exact_orbits(qn(n)).count == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_exact_matches_vf2(n):
    assert [list(b) for b in exact_orbits(cq(n))] == vf2_orbits(cq(n))


@pytest.mark.parametrize("g", [cq(3), cq(4), cq(5), qn(3), qn(4)], ids=["CQ3", "CQ4", "CQ5", "Q3", "Q4"])
def test_enumeration_matches_vf2_group(g):
    ours = sorted(tuple(p) for p in enumerate_automorphisms(g))
    assert ours == sorted(vf2_automorphisms(g))


@pytest.mark.parametrize("n, order", [(3, 16), (4, 32), (5, 32), (6, 64), (7, 64)])
def test_automorphism_group_orders(n, order):
    # frozen from a separate VF2 enumeration (networkx GraphMatcher)
    assert sum(1 for _ in enumerate_automorphisms(cq(n))) == order


def test_discovered_automorphisms_are_valid():
    for n in (5, 6, 7):
        g = cq(n)
        res = solve_orbits(g)
        assert res.automorphisms
        for m in res.automorphisms:
            assert is_automorphism(g, m)
            assert all(signature(m(u), n) == signature(u, n) for u in range(1 << n))


def test_refine_is_label_invariant():
    g = cq(5)
    a, ta = refine(g, individualize([0] * 32, 0))
    b, tb = refine(g, individualize([0] * 32, 6))
    c, tc = refine(g, individualize([0] * 32, 1))
    assert ta == tb
    assert ta != tc


fixtures = {
    "CQ3": cq(3),
    "Q2": qn(2),
    "Q3": qn(3),
    "P3": path_graph(3),
    "random8": random_graph(8, 0.5, seed=7),
}


@pytest.mark.parametrize("name", fixtures)
def test_naive_equals_exact(name):
    g = fixtures[name]
    assert naive_orbits(g) == exact_orbits(g)


def test_naive_examples():
    assert naive_orbits(cq(3)).count == 1
    assert naive_orbits(qn(2)).count == 1
    assert [list(b) for b in naive_orbits(path_graph(3))] == [[0, 2], [1]]
    with pytest.raises(ValueError):
        naive_orbits(cq(4))


@st.composite
def small_graphs(draw):
    order = draw(st.integers(1, 7))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(order, chosen)


@given(small_graphs())
def test_exact_equals_naive_on_random_graphs(g):
    assert exact_orbits(g) == naive_orbits(g)


def test_partition_equality_and_accessors():
    p = OrbitPartition([[3, 1], [0, 2]], n=2)
    assert p.blocks == ((0, 2), (1, 3))
    assert p.representatives == [0, 1]
    assert p.labels() == [0, 1, 0, 1]
    assert p.block_of(3) == 1
    assert p == OrbitPartition([[0, 2], [1, 3]])
    assert p != OrbitPartition([[0, 1], [2, 3]])


def test_closure_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        closure_orbits(5, generator_set(6))


def test_closure_of_identity_is_discrete():
    p = closure_orbits(3, [VertexMap.identity(3)])
    assert p.count == 8
