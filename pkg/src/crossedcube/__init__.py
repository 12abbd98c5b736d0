"""Crossed cubes CQ_n: construction, automorphisms, vertex orbits and P4 invariants."""

from .automorphism import (
    GeneratorSet,
    VertexMap,
    check_involution,
    counterexample_even_flip,
    gen_conditional_even_n,
    gen_conditional_odd_n,
    gen_flip,
    generator_set,
    is_automorphism,
    preserves_low_neighbors,
    reduce,
)
from .orbits import (
    OrbitPartition,
    closure_orbits,
    exact_orbits,
    naive_orbits,
    orbit_count_formula,
    signature,
    signature_partition,
)
from .p4 import contains_k4, has_p4, k4_witness_even, p4_graph, parity_classifier
from .topology import CubeGraph, Graph, build_cq, build_hypercube, is_edge_cq, neighbor_cq

__version__ = "0.1.0"

__all__ = [
    "GeneratorSet",
    "VertexMap",
    "check_involution",
    "counterexample_even_flip",
    "gen_conditional_even_n",
    "gen_conditional_odd_n",
    "gen_flip",
    "generator_set",
    "is_automorphism",
    "preserves_low_neighbors",
    "reduce",
    "OrbitPartition",
    "closure_orbits",
    "exact_orbits",
    "naive_orbits",
    "orbit_count_formula",
    "signature",
    "signature_partition",
    "contains_k4",
    "has_p4",
    "k4_witness_even",
    "p4_graph",
    "parity_classifier",
    "CubeGraph",
    "Graph",
    "build_cq",
    "build_hypercube",
    "is_edge_cq",
    "neighbor_cq",
]
