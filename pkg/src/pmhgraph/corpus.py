"""Exhaustive small-graph corpora, generated by vertex augmentation with
isomorphism dedup.  Known counts (1, 2, 4, 11, 34, 156, 1044 graphs on
1..7 vertices; 853 connected on <= 7) are asserted in the test suite as a
correctness cross-check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph_core import Graph, are_isomorphic


def _invariant(g: Graph):
    profiles = tuple(sorted(
        (g.degree(v), tuple(sorted(g.degree(w) for w in g.adjacency[v])))
        for v in range(g.n)))
    tri = 0
    for u, v in g.edges:
        tri += len(set(g.adjacency[u]) & set(g.adjacency[v]))
    return (g.n, len(g.edges), tri, profiles)


def _dedup(graphs):
    buckets = {}
    out = []
    for g in graphs:
        key = _invariant(g)
        reps = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
            out.append(g)
    return out


@lru_cache(maxsize=None)
def generate_all_graphs(n):
    """All graphs on exactly n vertices, up to isomorphism (disconnected
    included)."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph.from_edges(1, []),)
    smaller = generate_all_graphs(n - 1)
    candidates = []
    new = n - 1
    for g in smaller:
        for k in range(n):
            for subset in combinations(range(n - 1), k):
                edges = list(g.edges) + [(v, new) for v in subset]
                candidates.append(Graph.from_edges(n, edges))
    return tuple(_dedup(candidates))


@lru_cache(maxsize=None)
def generate_connected_graphs(n):
    return tuple(g for g in generate_all_graphs(n) if g.is_connected())


def connected_graphs_upto(n):
    out = []
    for k in range(1, n + 1):
        out.extend(generate_connected_graphs(k))
    return out


@lru_cache(maxsize=None)
def generate_subcubic_graphs(n):
    """All graphs with maximum degree <= 3 on n vertices, up to isomorphism.

    For n <= 7 this filters the full corpus; for larger n it augments the
    (n-1)-vertex subcubic corpus directly so the full corpus is never built.
    """
    if n <= 7:
        return tuple(g for g in generate_all_graphs(n) if g.max_degree() <= 3)
    smaller = generate_subcubic_graphs(n - 1)
    candidates = []
    new = n - 1
    for g in smaller:
        room = [v for v in range(g.n) if g.degree(v) <= 2]
        for k in range(min(3, len(room)) + 1):
            for subset in combinations(room, k):
                edges = list(g.edges) + [(v, new) for v in subset]
                candidates.append(Graph.from_edges(n, edges))
    return tuple(_dedup(candidates))


def connected_subcubic_upto(n, even_size_only=False):
    out = []
    for k in range(3, n + 1):
        for g in generate_subcubic_graphs(k):
            if not g.is_connected():
                continue
            if even_size_only and len(g.edges) % 2:
                continue
            out.append(g)
    return out
