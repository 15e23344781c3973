"""Compare the compiled search kernels against the pure-Python fallback.

Runs the forced-edge hamiltonian search and the longest-cycle search over a
few representative instances with both backends and prints a timing table.
Node counts must agree exactly (the backends mirror each other's candidate
ordering); a mismatch aborts the run.

Usage: python bench/bench_kernels.py
"""

import time

from pmhgraph._kernel import purecore
from pmhgraph.graph_core import make_named_graph
from pmhgraph.line_graph import build_line_graph
from pmhgraph.matching import enumerate_perfect_matchings

try:
    from pmhgraph._kernel import _fastcore
except ImportError:
    _fastcore = None


def instances():
    pet = make_named_graph("petersen", [])
    yield "petersen ham (absent)", "ham", pet, ()
    k8 = make_named_graph("complete", [8])
    yield "K8 ham", "ham", k8, ()
    lgm = build_line_graph(make_named_graph("coxeter", []))
    ms = enumerate_perfect_matchings(lgm.lg)
    for i, m in zip(range(3), ms):
        yield f"L(coxeter) forced ham #{i}", "ham", lgm.lg, tuple(m.edges)
    yield "petersen longest cycle", "longest", pet, ()
    grid = make_named_graph("bipartite", [4, 4])
    yield "K44 longest cycle", "longest", grid, ()


def run(kernel, kind, g, forced):
    adj = [list(a) for a in g.adjacency]
    t0 = time.perf_counter()
    if kind == "ham":
        status, _w, nodes = kernel.ham_cycle(adj, list(forced), 0)
    else:
        status, _w, nodes = kernel.longest_cycle(adj, 0)
    return time.perf_counter() - t0, status, nodes


def main():
    if _fastcore is None:
        print("compiled kernel unavailable; nothing to compare")
        return
    print(f"{'instance':34} {'pure':>10} {'compiled':>10} {'speedup':>8}  nodes")
    for name, kind, g, forced in instances():
        tp, sp, np_ = run(purecore, kind, g, forced)
        tc, sc, nc = run(_fastcore, kind, g, forced)
        if (sp, np_) != (sc, nc):
            raise SystemExit(f"backend mismatch on {name}: "
                             f"pure={(sp, np_)} compiled={(sc, nc)}")
        speed = tp / tc if tc > 0 else float("inf")
        print(f"{name:34} {tp:9.4f}s {tc:9.4f}s {speed:7.1f}x  {np_}")


if __name__ == "__main__":
    main()
