"""Pure-python search kernels.

Same contract as the compiled extension in ``_fastcore.pyx``: exhaustive
backtracking for hamiltonian cycles with forced edges, and exact longest
cycle search.  Both backends must produce identical verdicts and identical
witnesses (candidate orderings match line for line).

Status codes: 0 = FOUND, 1 = ABSENT, 2 = BUDGET (node cap hit before the
search tree was exhausted).
"""

FOUND = 0
ABSENT = 1
BUDGET = 2

BACKEND = "pure"


def ham_cycle(adj, forced=(), max_nodes=0):
    """Search for a hamiltonian cycle containing every edge in `forced`.

    adj: list of sorted neighbor lists (simple undirected graph).
    forced: iterable of (u, v) pairs, each an edge of the graph, with no
        vertex incident to more than two forced edges (caller-validated).
    max_nodes: 0 = unlimited, else cap on visited search nodes.

    Returns (status, cycle_or_None, nodes_expanded).  The cycle is a list
    of n distinct vertices (closure edge implied).
    """
    n = len(adj)
    if n < 3:
        return ABSENT, None, 0

    amask = [0] * n
    for v in range(n):
        m = 0
        for w in adj[v]:
            m |= 1 << w
        amask[v] = m

    fnbr = [[] for _ in range(n)]
    fset = set()
    for a, b in forced:
        fnbr[a].append(b)
        fnbr[b].append(a)
        fset.add((a, b) if a < b else (b, a))
    nforced = len(fset)

    # Anchor at a forced vertex when there is one; min degree otherwise.
    anchored = [v for v in range(n) if fnbr[v]]
    if anchored:
        start = min(anchored, key=lambda v: (len(adj[v]), v))
    else:
        start = min(range(n), key=lambda v: (len(adj[v]), v))

    full = (1 << n) - 1
    nodes = 0
    path = [start]
    used_forced = 0

    def edge_forced(a, b):
        return ((a, b) if a < b else (b, a)) in fset

    def reachable_ok(visited, u):
        # Every unvisited vertex and the start must be reachable from u
        # through unvisited vertices (start allowed as endpoint).
        allow = (~visited & full) | (1 << start) | (1 << u)
        reach = 1 << u
        frontier = 1 << u
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= amask[b.bit_length() - 1]
            nxt &= allow & ~reach
            reach |= nxt
            frontier = nxt
        return (allow & ~reach) == 0

    def degree_ok(visited, u):
        allow = (~visited & full) | (1 << start) | (1 << u)
        rest = ~visited & full
        while rest:
            b = rest & -rest
            rest ^= b
            v = b.bit_length() - 1
            if (amask[v] & allow & ~b).bit_count() < 2:
                return False
        return True

    def dfs(u, visited, count, used):
        nonlocal nodes
        nodes += 1
        if max_nodes and nodes > max_nodes:
            return BUDGET
        if count == n:
            closing = edge_forced(u, start)
            if (amask[u] >> start) & 1 and used + (1 if closing else 0) == nforced:
                return FOUND
            return ABSENT
        pending = [w for w in fnbr[u] if not _used_edge(u, w, used_edges)]
        if len(pending) >= 2:
            return ABSENT
        if pending:
            cands = pending
        else:
            cands = adj[u]
        if not degree_ok(visited, u) or not reachable_ok(visited, u):
            return ABSENT
        saw_budget = False
        for w in cands:
            bit = 1 << w
            if visited & bit:
                continue
            f = edge_forced(u, w)
            if f:
                used_edges.add((u, w) if u < w else (w, u))
            path.append(w)
            r = dfs(w, visited | bit, count + 1, used + (1 if f else 0))
            if r == FOUND:
                return FOUND
            if r == BUDGET:
                saw_budget = True
            path.pop()
            if f:
                used_edges.discard((u, w) if u < w else (w, u))
        return BUDGET if saw_budget else ABSENT

    used_edges = set()

    def _used_edge(a, b, _count):
        return ((a, b) if a < b else (b, a)) in used_edges

    # First move: with forced edges at the start, direction symmetry lets us
    # take the lowest forced neighbor as the first step.
    visited0 = 1 << start
    if fnbr[start]:
        w = min(fnbr[start])
        used_edges.add((start, w) if start < w else (w, start))
        path.append(w)
        status = dfs(w, visited0 | (1 << w), 2, 1)
        if status == FOUND:
            return FOUND, list(path), nodes
        return status, None, nodes
    status = dfs(start, visited0, 1, 0)
    if status == FOUND:
        return FOUND, list(path), nodes
    return status, None, nodes


def longest_cycle(adj, max_nodes=0):
    """Exact longest simple cycle by exhaustive branch and bound.

    Returns (status, best_cycle_or_None, nodes).  ABSENT means the graph is
    acyclic.  On BUDGET the best cycle found so far (possibly None) is
    returned and must be treated as a lower bound only.
    """
    n = len(adj)
    amask = [0] * n
    for v in range(n):
        m = 0
        for w in adj[v]:
            m |= 1 << w
        amask[v] = m

    best = []
    nodes = 0
    capped = False

    for root in range(n):
        if len(best) == n:
            break
        # Cycles whose minimum vertex is `root`: path explores ids > root.
        allow_root = 0
        for v in range(root + 1, n):
            allow_root |= 1 << v

        path = [root]

        def dfs(u, visited):
            nonlocal nodes, capped, best
            nodes += 1
            if max_nodes and nodes > max_nodes:
                capped = True
                return
            if len(path) >= 3 and (amask[u] >> root) & 1 and len(path) > len(best):
                best = list(path)
            # Bound: vertices reachable from u through the unvisited region.
            allow = allow_root & ~visited
            reach = 1 << u
            frontier = 1 << u
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= amask[b.bit_length() - 1]
                nxt &= allow & ~reach
                reach |= nxt
                frontier = nxt
            if len(path) + (reach & allow).bit_count() <= len(best):
                return
            for w in adj[u]:
                if w <= root:
                    continue
                bit = 1 << w
                if visited & bit:
                    continue
                path.append(w)
                dfs(w, visited | bit)
                path.pop()
                if capped:
                    return

        dfs(root, 1 << root)
        if capped:
            break

    if capped:
        return BUDGET, (best if best else None), nodes
    if not best:
        return ABSENT, None, nodes
    return FOUND, best, nodes
