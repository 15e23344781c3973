# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: hamiltonian cycle with forced edges, longest cycle.

Mirrors purecore.py exactly (same candidate ordering, same verdicts, same
witnesses); see that module for the contract.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

FOUND = 0
ABSENT = 1
BUDGET = 2

BACKEND = "compiled"

cdef int C_FOUND = 0
cdef int C_ABSENT = 1
cdef int C_BUDGET = 2


cdef struct HamState:
    int n
    int start
    int nforced
    int *off          # CSR offsets, n+1
    int *nbr          # CSR neighbor ids
    char *adjmat      # n*n adjacency
    char *forcedmat   # n*n forced-edge flags
    char *usedmat     # n*n used forced-edge flags
    int *fnbr         # 2 per vertex, -1 padded
    char *visited
    int *path
    long long nodes
    long long max_nodes
    int *queue        # BFS scratch
    char *reach       # BFS scratch


cdef bint _checks_ok(HamState *s, int u) noexcept:
    """Degree and reachability pruning over the unvisited region."""
    cdef int n = s.n
    cdef int v, w, i, cnt, qh, qt
    # degree: each unvisited vertex needs >= 2 usable neighbors
    for v in range(n):
        if s.visited[v] and v != s.start and v != u:
            continue
        if v == s.start or v == u:
            continue
        cnt = 0
        for i in range(s.off[v], s.off[v + 1]):
            w = s.nbr[i]
            if w == v:
                continue
            if (not s.visited[w]) or w == s.start or w == u:
                cnt += 1
                if cnt >= 2:
                    break
        if cnt < 2:
            return False
    # reachability from u through unvisited vertices (start allowed)
    memset(s.reach, 0, n)
    s.reach[u] = 1
    s.queue[0] = u
    qh = 0
    qt = 1
    while qh < qt:
        v = s.queue[qh]
        qh += 1
        for i in range(s.off[v], s.off[v + 1]):
            w = s.nbr[i]
            if s.reach[w]:
                continue
            if s.visited[w] and w != s.start:
                continue
            s.reach[w] = 1
            s.queue[qt] = w
            qt += 1
    for v in range(n):
        if (not s.visited[v] or v == s.start) and not s.reach[v]:
            return False
    return True


cdef int _ham_dfs(HamState *s, int u, int count, int used) noexcept:
    cdef int n = s.n
    cdef int w, i, r, npend, closing
    cdef int pend0 = -1
    cdef bint saw_budget = False
    s.nodes += 1
    if s.max_nodes > 0 and s.nodes > s.max_nodes:
        return C_BUDGET
    if count == n:
        closing = 1 if s.forcedmat[u * n + s.start] else 0
        if s.adjmat[u * n + s.start] and used + closing == s.nforced:
            return C_FOUND
        return C_ABSENT
    npend = 0
    for i in range(2):
        w = s.fnbr[2 * u + i]
        if w >= 0 and not s.usedmat[u * n + w]:
            if npend == 0:
                pend0 = w
            npend += 1
    if npend >= 2:
        return C_ABSENT
    if not _checks_ok(s, u):
        return C_ABSENT
    if npend == 1:
        if s.visited[pend0]:
            return C_ABSENT
        s.usedmat[u * n + pend0] = 1
        s.usedmat[pend0 * n + u] = 1
        s.visited[pend0] = 1
        s.path[count] = pend0
        r = _ham_dfs(s, pend0, count + 1, used + 1)
        if r == C_FOUND:
            return C_FOUND
        s.visited[pend0] = 0
        s.usedmat[u * n + pend0] = 0
        s.usedmat[pend0 * n + u] = 0
        return r
    for i in range(s.off[u], s.off[u + 1]):
        w = s.nbr[i]
        if s.visited[w]:
            continue
        s.visited[w] = 1
        s.path[count] = w
        r = _ham_dfs(s, w, count + 1, used)
        if r == C_FOUND:
            return C_FOUND
        if r == C_BUDGET:
            saw_budget = True
        s.visited[w] = 0
    return C_BUDGET if saw_budget else C_ABSENT


def ham_cycle(adj, forced=(), max_nodes=0):
    """See purecore.ham_cycle."""
    cdef int n = len(adj)
    if n < 3:
        return ABSENT, None, 0
    cdef int m = 0
    for nbrs in adj:
        m += len(nbrs)

    cdef HamState s
    s.n = n
    s.nodes = 0
    s.max_nodes = max_nodes
    s.off = <int *> malloc((n + 1) * sizeof(int))
    s.nbr = <int *> malloc(m * sizeof(int))
    s.adjmat = <char *> malloc(n * n)
    s.forcedmat = <char *> malloc(n * n)
    s.usedmat = <char *> malloc(n * n)
    s.fnbr = <int *> malloc(2 * n * sizeof(int))
    s.visited = <char *> malloc(n)
    s.path = <int *> malloc(n * sizeof(int))
    s.queue = <int *> malloc(n * sizeof(int))
    s.reach = <char *> malloc(n)

    cdef int v, w, i, k, start, first, status
    try:
        memset(s.adjmat, 0, n * n)
        memset(s.forcedmat, 0, n * n)
        memset(s.usedmat, 0, n * n)
        memset(s.visited, 0, n)
        k = 0
        for v in range(n):
            s.off[v] = k
            for w in adj[v]:
                s.nbr[k] = w
                s.adjmat[v * n + w] = 1
                k += 1
        s.off[n] = k
        for i in range(2 * n):
            s.fnbr[i] = -1
        s.nforced = 0
        for a, b in forced:
            v = a
            w = b
            if not s.forcedmat[v * n + w]:
                s.nforced += 1
            s.forcedmat[v * n + w] = 1
            s.forcedmat[w * n + v] = 1
            if s.fnbr[2 * v] < 0:
                s.fnbr[2 * v] = w
            elif s.fnbr[2 * v + 1] < 0 or s.fnbr[2 * v + 1] == w:
                if s.fnbr[2 * v] != w:
                    s.fnbr[2 * v + 1] = w
            if s.fnbr[2 * w] < 0:
                s.fnbr[2 * w] = v
            elif s.fnbr[2 * w + 1] < 0 or s.fnbr[2 * w + 1] == v:
                if s.fnbr[2 * w] != v:
                    s.fnbr[2 * w + 1] = v
        # normalize fnbr pairs so the minimum comes first
        for v in range(n):
            if s.fnbr[2 * v + 1] >= 0 and s.fnbr[2 * v + 1] < s.fnbr[2 * v]:
                s.fnbr[2 * v], s.fnbr[2 * v + 1] = s.fnbr[2 * v + 1], s.fnbr[2 * v]

        start = -1
        for v in range(n):
            if s.fnbr[2 * v] >= 0:
                if start < 0 or (s.off[v + 1] - s.off[v], v) < (s.off[start + 1] - s.off[start], start):
                    start = v
        if start < 0:
            start = 0
            for v in range(1, n):
                if (s.off[v + 1] - s.off[v], v) < (s.off[start + 1] - s.off[start], start):
                    start = v
        s.start = start
        s.visited[start] = 1
        s.path[0] = start

        first = s.fnbr[2 * start]
        if first >= 0:
            s.usedmat[start * n + first] = 1
            s.usedmat[first * n + start] = 1
            s.visited[first] = 1
            s.path[1] = first
            status = _ham_dfs(&s, first, 2, 1)
        else:
            status = _ham_dfs(&s, start, 1, 0)

        if status == C_FOUND:
            return FOUND, [s.path[i] for i in range(n)], s.nodes
        return (ABSENT if status == C_ABSENT else BUDGET), None, s.nodes
    finally:
        free(s.off)
        free(s.nbr)
        free(s.adjmat)
        free(s.forcedmat)
        free(s.usedmat)
        free(s.fnbr)
        free(s.visited)
        free(s.path)
        free(s.queue)
        free(s.reach)


cdef struct LcState:
    int n
    int root
    int *off
    int *nbr
    char *adjmat
    char *visited
    int *path
    int plen
    int *best
    int blen
    long long nodes
    long long max_nodes
    bint capped
    int *queue
    char *reach


cdef void _lc_dfs(LcState *s, int u) noexcept:
    cdef int n = s.n
    cdef int v, w, i, qh, qt, cnt
    s.nodes += 1
    if s.max_nodes > 0 and s.nodes > s.max_nodes:
        s.capped = True
        return
    if s.plen >= 3 and s.adjmat[u * n + s.root] and s.plen > s.blen:
        for i in range(s.plen):
            s.best[i] = s.path[i]
        s.blen = s.plen
    # bound: reachable unvisited vertices above root
    memset(s.reach, 0, n)
    s.reach[u] = 1
    s.queue[0] = u
    qh = 0
    qt = 1
    cnt = 0
    while qh < qt:
        v = s.queue[qh]
        qh += 1
        for i in range(s.off[v], s.off[v + 1]):
            w = s.nbr[i]
            if w <= s.root or s.reach[w] or s.visited[w]:
                continue
            s.reach[w] = 1
            s.queue[qt] = w
            qt += 1
            cnt += 1
    if s.plen + cnt <= s.blen:
        return
    for i in range(s.off[u], s.off[u + 1]):
        w = s.nbr[i]
        if w <= s.root or s.visited[w]:
            continue
        s.visited[w] = 1
        s.path[s.plen] = w
        s.plen += 1
        _lc_dfs(s, w)
        s.plen -= 1
        s.visited[w] = 0
        if s.capped:
            return


def longest_cycle(adj, max_nodes=0):
    """See purecore.longest_cycle."""
    cdef int n = len(adj)
    cdef int m = 0
    for nbrs in adj:
        m += len(nbrs)

    cdef LcState s
    s.n = n
    s.nodes = 0
    s.max_nodes = max_nodes
    s.capped = False
    s.blen = 0
    s.off = <int *> malloc((n + 1) * sizeof(int))
    s.nbr = <int *> malloc(m * sizeof(int))
    s.adjmat = <char *> malloc(n * n if n else 1)
    s.visited = <char *> malloc(n if n else 1)
    s.path = <int *> malloc(n * sizeof(int) if n else 4)
    s.best = <int *> malloc(n * sizeof(int) if n else 4)
    s.queue = <int *> malloc(n * sizeof(int) if n else 4)
    s.reach = <char *> malloc(n if n else 1)

    cdef int v, w, k, root, i
    try:
        memset(s.adjmat, 0, n * n if n else 1)
        memset(s.visited, 0, n if n else 1)
        k = 0
        for v in range(n):
            s.off[v] = k
            for w in adj[v]:
                s.nbr[k] = w
                s.adjmat[v * n + w] = 1
                k += 1
        s.off[n] = k

        for root in range(n):
            if s.blen == n or s.capped:
                break
            s.root = root
            s.visited[root] = 1
            s.path[0] = root
            s.plen = 1
            _lc_dfs(&s, root)
            s.visited[root] = 0

        if s.capped:
            best = [s.best[i] for i in range(s.blen)] if s.blen else None
            return BUDGET, best, s.nodes
        if s.blen == 0:
            return ABSENT, None, s.nodes
        return FOUND, [s.best[i] for i in range(s.blen)], s.nodes
    finally:
        free(s.off)
        free(s.nbr)
        free(s.adjmat)
        free(s.visited)
        free(s.path)
        free(s.best)
        free(s.queue)
        free(s.reach)
