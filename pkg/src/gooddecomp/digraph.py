"""Loop-free simple digraphs and the basic predicates everything else builds on.

Vertices are dense integers 0..n-1.  Arcs are ordered pairs stored in a
frozenset; opposite arcs (u,v) and (v,u) may coexist, parallel arcs cannot.
All iteration orders exposed to callers are sorted so downstream algorithms
are deterministic.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Optional, Sequence

Arc = tuple[int, int]

ISO_ORDER_BOUND = 12


class Digraph:
    """Immutable digraph on vertices 0..n-1."""

    __slots__ = ("n", "arcs", "labels", "__dict__")

    def __init__(self, n: int, arcs: Iterable[Arc], labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("order must be nonnegative")
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise ValueError(f"loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for order {n}")
        self.n = n
        self.arcs = arcset
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal order")
        self.labels = labels

    @property
    def m(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# named digraphs

def cycle(n: int) -> Digraph:
    """Directed cycle C_n (the digon for n=2)."""
    if n < 2:
        raise ValueError("cycle needs order >= 2")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Digraph:
    """Directed path P_n on n vertices."""
    if n < 1:
        raise ValueError("path needs order >= 1")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Digraph:
    """Complete digraph: every ordered pair is an arc."""
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def empty(n: int) -> Digraph:
    """Arcless digraph on n vertices."""
    return Digraph(n, [])


def s4() -> Digraph:
    """Complete digraph on 4 vertices minus the 4-cycle 0->2->1->3->0.

    Remaining arcs: the digons {0,1} and {2,3} plus 0->3, 1->2, 3->1, 2->0.
    The unique 2-arc-strong semicomplete digraph without two arc-disjoint
    strong spanning subdigraphs.
    """
    return Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2), (0, 3), (1, 2), (3, 1), (2, 0)])


# ---------------------------------------------------------------------------
# predicates

def _reach_from(d: Digraph, start: int, reverse: bool = False) -> set[int]:
    adj = d.in_neighbors if reverse else d.out_neighbors
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strong(d: Digraph) -> bool:
    """Every ordered vertex pair is joined by a directed path.

    Orders 0 and 1 are strong by convention.
    """
    if d.n <= 1:
        return True
    full = set(range(d.n))
    return _reach_from(d, 0) == full and _reach_from(d, 0, reverse=True) == full


def is_semicomplete(d: Digraph) -> bool:
    """At least one arc between every pair of distinct vertices."""
    return all(
        (u, v) in d.arcs or (v, u) in d.arcs
        for u in range(d.n)
        for v in range(u + 1, d.n)
    )


def _max_arc_disjoint_paths(d: Digraph, s: int, t: int) -> int:
    """Unit-capacity max-flow from s to t by BFS augmentation."""
    # residual adjacency: cap 1 forward per arc, 0 backward
    cap: dict[Arc, int] = {}
    adj: list[set[int]] = [set() for _ in range(d.n)]
    for u, v in d.arcs:
        cap[(u, v)] = 1
        cap.setdefault((v, u), 0)
        adj[u].add(v)
        adj[v].add(u)
    flow = 0
    while True:
        prev = {s: s}
        queue = [s]
        while queue and t not in prev:
            nxt = []
            for u in queue:
                for v in sorted(adj[u]):
                    if v not in prev and cap.get((u, v), 0) > 0:
                        prev[v] = u
                        nxt.append(v)
            queue = nxt
        if t not in prev:
            return flow
        v = t
        while v != s:
            u = prev[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1


def arc_connectivity(d: Digraph) -> int:
    """Largest k such that d stays strong after deleting any k-1 arcs.

    Minimum over all ordered pairs of the max number of arc-disjoint paths.
    """
    if d.n < 2:
        raise ValueError("undefined for trivial digraph")
    best = None
    for s in range(d.n):
        for t in range(d.n):
            if s == t:
                continue
            k = _max_arc_disjoint_paths(d, s, t)
            if best is None or k < best:
                best = k
            if best == 0:
                return 0
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# small-graph isomorphism

def _degree_signature(d: Digraph) -> list[tuple[int, int]]:
    return sorted((d.out_degree(v), d.in_degree(v)) for v in range(d.n))


def find_isomorphism(a: Digraph, b: Digraph) -> Optional[dict[int, int]]:
    """Arc-preserving bijection a -> b, or None.  Orders must be <= 12."""
    if a.n > ISO_ORDER_BOUND or b.n > ISO_ORDER_BOUND:
        raise ValueError("isomorphism bound exceeded")
    if a.n != b.n or a.m != b.m:
        return None
    if _degree_signature(a) != _degree_signature(b):
        return None

    n = a.n
    deg_a = [(a.out_degree(v), a.in_degree(v)) for v in range(n)]
    deg_b = [(b.out_degree(v), b.in_degree(v)) for v in range(n)]
    mapping: list[Optional[int]] = [None] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or deg_a[v] != deg_b[w]:
                continue
            ok = True
            for u in range(v):
                mu = mapping[u]
                if ((u, v) in a.arcs) != ((mu, w) in b.arcs):
                    ok = False
                    break
                if ((v, u) in a.arcs) != ((w, mu) in b.arcs):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                mapping[v] = None
                used[w] = False
        return False

    if extend(0):
        return {v: mapping[v] for v in range(n)}  # type: ignore[misc]
    return None


def is_isomorphic_small(a: Digraph, b: Digraph) -> bool:
    return find_isomorphism(a, b) is not None


def relabel(d: Digraph, perm: Sequence[int]) -> Digraph:
    """Apply vertex permutation: new vertex perm[v] plays the role of v."""
    if sorted(perm) != list(range(d.n)):
        raise ValueError("not a permutation")
    return Digraph(d.n, [(perm[u], perm[v]) for u, v in d.arcs])


def all_digraphs_on_arcs(n: int, max_arcs: int) -> Iterable[Digraph]:
    """All labeled digraphs of order n with at most max_arcs arcs (test helper)."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for k in range(max_arcs + 1):
        for combo in itertools.combinations(pairs, k):
            yield Digraph(n, combo)
