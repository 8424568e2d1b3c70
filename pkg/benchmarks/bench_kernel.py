"""Compare the compiled search kernel against the pure-Python fallback.

Runs the exhaustive good-decomposition search on instances that force deep
backtracking (the known non-decomposable digraphs, where the whole tree must
be exhausted) and on decomposable controls, then reports explored nodes,
elapsed time, and nodes/second for each backend.

Usage: python3 benchmarks/bench_kernel.py
"""

import time

from gooddecomp import complete, exception_digraph, oracle_good_decomposition
from gooddecomp import _kernel_py
from gooddecomp import oracle as oracle_mod

try:
    from gooddecomp import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

INSTANCES = [
    ("S4 (exhaust, 8 arcs)", exception_digraph("S4")),
    ("C3[K2,K2,K2] (exhaust, 12 arcs)", exception_digraph("C3_K2_K2_K2")),
    ("C3[P2,K2,K2] (exhaust, 13 arcs)", exception_digraph("C3_P2_K2_K2")),
    ("C3[K2,K2,K3] (exhaust, 16 arcs)", exception_digraph("C3_K2_K2_K3")),
    ("K5 (first hit, 20 arcs)", complete(5)),
    ("K6 (first hit, 30 arcs)", complete(6)),
]

REPEAT = 5


def bench(kernel, d):
    best = float("inf")
    nodes = None
    for _ in range(REPEAT):
        t0 = time.perf_counter()
        rep = oracle_good_decomposition(d, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
        if nodes is None:
            nodes = rep.nodes_explored
        else:
            assert nodes == rep.nodes_explored, "kernel is non-deterministic"
    return nodes, best


def main():
    backends = [("python", _kernel_py)]
    if _kernel_c is not None:
        backends.append(("compiled", _kernel_c))
    print(f"default backend: {oracle_mod.BACKEND}")
    header = f"{'instance':34} {'backend':9} {'nodes':>9} {'best of ' + str(REPEAT):>12} {'nodes/s':>12}"
    print(header)
    print("-" * len(header))
    for label, d in INSTANCES:
        results = {}
        for name, kernel in backends:
            nodes, secs = bench(kernel, d)
            results[name] = (nodes, secs)
            rate = nodes / secs if secs > 0 and nodes else float("nan")
            print(f"{label:34} {name:9} {nodes:>9} {secs:>11.6f}s {rate:>12.0f}")
        if len(results) == 2:
            assert results["python"][0] == results["compiled"][0], (
                "backends explored different trees"
            )
            speedup = results["python"][1] / results["compiled"][1]
            print(f"{'':34} speedup  {speedup:>21.1f}x")


if __name__ == "__main__":
    main()
