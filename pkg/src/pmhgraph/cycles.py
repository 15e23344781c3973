"""Cycle and tour machinery: hamiltonian cycles with forced edges, dominating
cycles, dominating tours, Euler tours, circumference, arbitrarily-traceable
and hypohamiltonian predicates.

Exact searches route through the kernel backend (compiled when available).
Budget-capped searches report "inconclusive", never absence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import _kernel
from .errors import CapacityError, PreconditionError, StructureError
from .graph_core import Graph

FOUND = "found"
ABSENT = "absent"
INCONCLUSIVE = "inconclusive"

_STATUS = {_kernel.FOUND: FOUND, _kernel.ABSENT: ABSENT, _kernel.BUDGET: INCONCLUSIVE}

CYCLE_SPACE_DIM_CAP = 24


@dataclass(frozen=True)
class CycleWalk:
    """A closed walk; `vertices` repeats the first vertex last (a single
    vertex stands for the trivial length-0 tour)."""

    vertices: tuple
    kinds: frozenset = field(default_factory=frozenset)

    @property
    def touched(self):
        return frozenset(self.vertices)

    @property
    def edge_seq(self):
        vs = self.vertices
        return tuple((min(vs[i], vs[i + 1]), max(vs[i], vs[i + 1]))
                     for i in range(len(vs) - 1))

    def length(self):
        return len(self.vertices) - 1 if len(self.vertices) > 1 else 0

    def contains_edges(self, edges):
        have = set(self.edge_seq)
        return all((min(u, v), max(u, v)) in have for u, v in edges)


def closed(vertices, kinds=()):
    vs = list(vertices)
    if len(vs) > 1 and vs[0] != vs[-1]:
        vs.append(vs[0])
    return CycleWalk(vertices=tuple(vs), kinds=frozenset(kinds))


def validate_walk(g: Graph, walk: CycleWalk):
    """Independent re-check of a walk's claimed kind flags."""
    vs = walk.vertices
    if not vs:
        return False
    if len(vs) == 1:
        interior = []
    else:
        if vs[0] != vs[-1]:
            return False
        interior = vs[:-1]
        for i in range(len(vs) - 1):
            if not g.has_edge(vs[i], vs[i + 1]):
                return False
    edges = walk.edge_seq
    if "cycle" in walk.kinds or "hamiltonian" in walk.kinds:
        if len(interior) < 3 or len(set(interior)) != len(interior):
            return False
    if "tour" in walk.kinds or "euler" in walk.kinds:
        if len(set(edges)) != len(edges):
            return False
    if "euler" in walk.kinds and set(edges) != set(g.edges):
        return False
    if "hamiltonian" in walk.kinds and set(interior) != set(range(g.n)):
        return False
    if "dominating" in walk.kinds:
        touched = walk.touched
        for u, v in g.edges:
            if u not in touched and v not in touched:
                return False
    return True


@dataclass(frozen=True)
class SearchResult:
    outcome: str              # found / absent / inconclusive
    walk: CycleWalk | None
    nodes: int

    def __bool__(self):
        return self.outcome == FOUND


def _check_forced(g: Graph, forced):
    norm = [(min(u, v), max(u, v)) for u, v in forced]
    deg = {}
    for u, v in norm:
        if (u, v) not in g.edges:
            raise PreconditionError(f"forced edge ({u},{v}) not in the graph")
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    bad = [v for v, d in deg.items() if d > 2]
    if bad:
        raise PreconditionError(
            f"vertex {bad[0]} has {deg[bad[0]]} forced incidences (max 2)")
    return norm


def find_hamiltonian_cycle(g: Graph, forced=(), max_nodes=0) -> SearchResult:
    """Exhaustive hamiltonian cycle search; the cycle must contain every
    forced edge.  Absence verdicts are certified by search-tree exhaustion."""
    norm = _check_forced(g, forced)
    status, cyc, nodes = _kernel.ham_cycle([list(a) for a in g.adjacency], norm,
                                           max_nodes)
    if status == _kernel.FOUND:
        walk = closed(cyc, kinds={"cycle", "tour", "hamiltonian", "dominating"})
        assert validate_walk(g, walk) and walk.contains_edges(norm)
        return SearchResult(FOUND, walk, nodes)
    return SearchResult(_STATUS[status], None, nodes)


def _induced(g: Graph, keep):
    keep = sorted(keep)
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph.from_edges(len(keep), edges), keep


def find_dominating_cycle(g: Graph, allowed_untouched=frozenset(),
                          max_nodes=0) -> SearchResult:
    """Dominating cycle whose untouched vertices form a subset of
    `allowed_untouched`; candidate untouched sets are tried smallest first
    with lexicographic tie-break."""
    allowed = sorted(set(allowed_untouched))
    saw_budget = False
    total_nodes = 0
    for size in range(len(allowed) + 1):
        for untouched in combinations(allowed, size):
            off = set(untouched)
            if any(u in off and v in off for u, v in g.edges):
                continue  # an edge with both ends untouched is undominated
            if g.n - size < 3:
                continue
            sub, keep = _induced(g, set(range(g.n)) - off)
            res = find_hamiltonian_cycle(sub, max_nodes=max_nodes)
            total_nodes += res.nodes
            if res.outcome == FOUND:
                verts = [keep[v] for v in res.walk.vertices[:-1]]
                walk = closed(verts, kinds={"cycle", "tour", "dominating"})
                assert validate_walk(g, walk)
                return SearchResult(FOUND, walk, total_nodes)
            if res.outcome == INCONCLUSIVE:
                saw_budget = True
    return SearchResult(INCONCLUSIVE if saw_budget else ABSENT, None, total_nodes)


def _spanning_even_subgraph_exists(g: Graph):
    """Connected spanning subgraph with every degree even and positive.

    Enumerates the cycle space (spanning tree + fundamental cycles); exact
    for dimension up to CYCLE_SPACE_DIM_CAP.
    """
    n = g.n
    m = len(g.edges)
    if n == 0:
        return False
    edge_list = g.edge_list()
    idx = {e: i for i, e in enumerate(edge_list)}
    # spanning tree via BFS
    parent_edge = [-1] * n
    seen = {0}
    order = [0]
    for u in order:
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent_edge[w] = idx[(min(u, w), max(u, w))]
                order.append(w)
    if len(seen) != n:
        return False
    tree = set(e for e in parent_edge if e >= 0)
    chords = [i for i in range(m) if i not in tree]
    dim = len(chords)
    if dim > CYCLE_SPACE_DIM_CAP:
        raise CapacityError(f"cycle space dimension {dim} exceeds cap")

    # fundamental cycle of each chord, as an edge bitmask
    depth = [0] * n
    par = [-1] * n
    for u in order:
        for w in g.adjacency[u]:
            if parent_edge[w] == idx[(min(u, w), max(u, w))] and w != 0:
                par[w] = u
                depth[w] = depth[u] + 1

    def tree_path_mask(a, b):
        mask = 0
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            mask |= 1 << parent_edge[a]
            a = par[a]
        return mask

    basis = []
    for c in chords:
        u, v = edge_list[c]
        basis.append((1 << c) | tree_path_mask(u, v))

    full_vs = set(range(n))
    for combo in range(1, 1 << dim):
        mask = 0
        cc = combo
        i = 0
        while cc:
            if cc & 1:
                mask ^= basis[i]
            cc >>= 1
            i += 1
        if not mask:
            continue
        # vertex cover of the selected edges, then connectivity
        verts = set()
        sel = []
        mm = mask
        while mm:
            b = mm & -mm
            mm ^= b
            e = edge_list[b.bit_length() - 1]
            sel.append(e)
            verts.update(e)
        if verts != full_vs:
            continue
        adj = {v: [] for v in verts}
        for u, v in sel:
            adj[u].append(v)
            adj[v].append(u)
        stack = [next(iter(verts))]
        comp = {stack[0]}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        if comp == verts:
            return True
    return False


def has_dominating_tour(g: Graph):
    """Closed trail (possibly a single vertex) dominating every edge.

    Independent of the hamiltonian kernel on purpose: candidate touched sets
    are vertex covers, and trail existence within a cover is decided through
    the cycle space of the induced subgraph.
    """
    if not g.is_connected():
        raise StructureError("dominating tour requires a connected graph")
    if g.n == 1:
        return True
    for size in range(1, g.n + 1):
        for sub in combinations(range(g.n), size):
            s = set(sub)
            if any(u not in s and v not in s for u, v in g.edges):
                continue  # not a vertex cover
            if size == 1:
                return True  # trivial tour at a dominating vertex
            induced, _keep = _induced(g, s)
            if not induced.is_connected():
                continue
            if _spanning_even_subgraph_exists(induced):
                return True
    return False


def euler_tour(g: Graph):
    """Euler tour by Hierholzer's algorithm (smallest-neighbor-first, so the
    output is deterministic), or None when some degree is odd."""
    if not g.is_connected():
        raise StructureError("euler tour requires a connected graph")
    if any(g.degree(v) % 2 for v in range(g.n)):
        return None
    if not g.edges:
        return closed([0], kinds={"tour", "euler"})
    remaining = {v: list(g.adjacency[v]) for v in range(g.n)}
    used = set()
    start = next(v for v in range(g.n) if g.degree(v) > 0)
    stack = [start]
    out = []
    while stack:
        u = stack[-1]
        found = None
        while remaining[u]:
            w = remaining[u][0]
            e = (min(u, w), max(u, w), )
            if e in used:
                remaining[u].pop(0)
                continue
            found = w
            break
        if found is None:
            out.append(stack.pop())
        else:
            used.add((min(u, found), max(u, found)))
            stack.append(found)
    out.reverse()
    walk = closed(out, kinds={"tour", "euler"})
    assert validate_walk(g, walk)
    return walk


def is_arbitrarily_traceable(g: Graph, v):
    """True iff g is eulerian and every cycle of g passes through v,
    equivalently g - v is acyclic."""
    if not g.is_connected():
        return False
    if any(g.degree(u) % 2 for u in range(g.n)):
        return False
    # cycle detection in g - v
    seen = set()
    for root in range(g.n):
        if root == v or root in seen:
            continue
        stack = [(root, -1)]
        seen.add(root)
        while stack:
            u, p = stack.pop()
            skipped_parent = False
            for w in g.adjacency[u]:
                if w == v:
                    continue
                if w == p and not skipped_parent:
                    skipped_parent = True
                    continue
                if w in seen:
                    return False
                seen.add(w)
                stack.append((w, u))
    return True


def is_hypohamiltonian(g: Graph, max_nodes=0):
    """Not hamiltonian, but every single-vertex deletion is hamiltonian."""
    if find_hamiltonian_cycle(g, max_nodes=max_nodes).outcome == FOUND:
        return False
    for v in range(g.n):
        sub, _ = _induced(g, set(range(g.n)) - {v})
        if not sub.is_connected():
            return False
        if find_hamiltonian_cycle(sub, max_nodes=max_nodes).outcome != FOUND:
            return False
    return True


def longest_cycle_search(g: Graph, max_nodes=0) -> SearchResult:
    """Exact longest cycle (branch and bound); inconclusive under a budget
    cap returns the best cycle found so far as a lower bound."""
    status, cyc, nodes = _kernel.longest_cycle([list(a) for a in g.adjacency],
                                               max_nodes)
    if cyc is not None:
        walk = closed(cyc, kinds={"cycle", "tour"})
        assert validate_walk(g, walk)
    else:
        walk = None
    return SearchResult(_STATUS[status], walk, nodes)


def circumference(g: Graph):
    """Length of a longest cycle; raises on acyclic input."""
    res = longest_cycle_search(g)
    if res.outcome == ABSENT:
        raise StructureError("graph is acyclic: circumference undefined")
    return res.walk.length()
