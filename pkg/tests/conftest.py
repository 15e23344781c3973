"""Shared helpers: naive reference oracles and common graphs.

The naive oracles are deliberately dumb (permutation sweeps) so they share
no code or pruning ideas with the search kernels they validate.
"""

import random
from itertools import combinations, permutations

import pytest

from pmhgraph.graph_core import Graph, make_named_graph


def naive_ham_cycle(g, forced=()):
    """Permutation-sweep hamiltonian cycle containing the forced edges, or
    None.  Exponential; callers keep n small."""
    if g.n < 3:
        return None
    need = {(min(u, v), max(u, v)) for u, v in forced}
    for perm in permutations(range(1, g.n)):
        cyc = (0,) + perm
        es = {(min(cyc[i], cyc[(i + 1) % g.n]),
               max(cyc[i], cyc[(i + 1) % g.n])) for i in range(g.n)}
        if need <= es and all(e in g.edges for e in es):
            return cyc
    return None


def naive_longest_cycle_length(g):
    """Longest cycle length by sweeping vertex subsets, or 0 if acyclic."""
    for k in range(g.n, 2, -1):
        for sub in combinations(range(g.n), k):
            for perm in permutations(sub[1:]):
                cyc = (sub[0],) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    return k
    return 0


def random_graph(rng, n, p):
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20260823)


def two_squares():
    """Two 4-cycles sharing vertex 0; arbitrarily traceable from 0."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0),
                                (0, 4), (4, 5), (5, 6), (6, 0)])


@pytest.fixture
def petersen():
    return make_named_graph("petersen", [])


@pytest.fixture
def k4():
    return make_named_graph("complete", [4])
