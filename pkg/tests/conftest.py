"""Shared independent oracles and random-instance generators for the tests.

Everything here deliberately avoids the library's own algorithms: strongness
by boolean matrix closure, connectivity by brute-force arc deletion, covers by
exhaustive cycle-subset search, decompositions by subset/complement scanning.
"""

from __future__ import annotations

import itertools
import random

import pytest

from gooddecomp import Digraph, is_strong


def strong_by_closure(d: Digraph) -> bool:
    """Independent strongness check: boolean transitive closure."""
    n = d.n
    if n <= 1:
        return True
    reach = [[u == v for v in range(n)] for u in range(n)]
    for u, v in d.arcs:
        reach[u][v] = True
    for k in range(n):
        rk = reach[k]
        for i in range(n):
            if reach[i][k]:
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return all(all(row) for row in reach)


def arc_connectivity_bruteforce(d: Digraph) -> int:
    """Smallest arc set whose removal destroys strongness (only for tiny m)."""
    if not strong_by_closure(d):
        return 0
    arcs = sorted(d.arcs)
    for k in range(1, len(arcs) + 1):
        for combo in itertools.combinations(arcs, k):
            if not strong_by_closure(Digraph(d.n, d.arcs - set(combo))):
                return k
    return len(arcs)


def simple_cycles(d: Digraph) -> list[tuple[int, ...]]:
    """All simple directed cycles, each rotated to start at its minimum vertex."""
    out = set()

    def walk(path: list[int], seen: set[int]):
        v = path[-1]
        for w in d.out_neighbors[v]:
            if w == path[0]:
                k = path.index(min(path))
                out.add(tuple(path[k:] + path[:k]))
            elif w not in seen and w > path[0]:
                walk(path + [w], seen | {w})

    for start in range(d.n):
        walk([start], {start})
    return sorted(out)


def has_cycle_cover_bruteforce(d: Digraph) -> bool:
    """Exhaustive search for arc-disjoint cycles covering all vertices."""
    cycles = simple_cycles(d)
    arcsets = [frozenset(zip(c, c[1:] + c[:1])) for c in cycles]
    vsets = [frozenset(c) for c in cycles]
    full = frozenset(range(d.n))

    def rec(i: int, used_arcs: frozenset, covered: frozenset) -> bool:
        if covered == full:
            return True
        if i == len(cycles):
            return False
        if rec(i + 1, used_arcs, covered):
            return True
        if not (arcsets[i] & used_arcs):
            return rec(i + 1, used_arcs | arcsets[i], covered | vsets[i])
        return False

    return rec(0, frozenset(), frozenset())


def good_decomposition_exists_bruteforce(d: Digraph) -> bool:
    """Reference decision: some arc subset and its complement are both strong
    spanning.  (A_2 exists inside the complement iff the whole complement is
    strong.)  Only for small arc counts."""
    if d.n <= 1:
        return True
    arcs = sorted(d.arcs)
    for k in range(len(arcs) + 1):
        for combo in itertools.combinations(arcs, k):
            a1 = set(combo)
            if strong_by_closure(Digraph(d.n, a1)) and strong_by_closure(
                Digraph(d.n, d.arcs - a1)
            ):
                return True
    return False


def random_strong_digraph(rng: random.Random, max_order: int, density: float = 0.5) -> Digraph:
    while True:
        n = rng.randint(2, max_order)
        arcs = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < density
        ]
        d = Digraph(n, arcs)
        if is_strong(d):
            return d


def random_sparse_strong_digraph(rng: random.Random, n: int, max_arcs: int) -> Digraph:
    """Strong digraph built by ear growth: a cycle through some vertices, then
    path ears absorbing the rest, then optional chords, capped at max_arcs."""
    verts = list(range(n))
    rng.shuffle(verts)
    k = rng.randint(2, n)
    cyc = verts[:k]
    arcs = set(zip(cyc, cyc[1:] + cyc[:1]))
    attached = list(cyc)
    rest = verts[k:]
    while rest:
        take = rng.randint(1, len(rest))
        interior, rest = rest[:take], rest[take:]
        chain = [rng.choice(attached)] + interior + [rng.choice(attached)]
        arcs.update(zip(chain, chain[1:]))
        attached.extend(interior)
    while len(arcs) < max_arcs and rng.random() < 0.5:
        u, v = rng.sample(range(n), 2)
        arcs.add((u, v))
    if len(arcs) > max_arcs:
        return random_sparse_strong_digraph(rng, n, max_arcs)
    d = Digraph(n, arcs)
    assert is_strong(d)
    return d


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xD1A6)
