"""Ear decompositions and Hamiltonian-cycle routines.

Cycles are vertex tuples (v0,...,vk-1) standing for the closed walk
v0 -> v1 -> ... -> vk-1 -> v0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Arc, Digraph, is_semicomplete, is_strong

Cycle = tuple[int, ...]

HAMILTON_BRUTE_BOUND = 36


def cycle_arcs(cyc: Cycle) -> list[Arc]:
    return [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def is_cycle_of(d: Digraph, cyc: Cycle) -> bool:
    return (
        len(cyc) >= 2
        and len(set(cyc)) == len(cyc)
        and all(a in d.arcs for a in cycle_arcs(cyc))
    )


@dataclass(frozen=True)
class Ear:
    """Open ear: vertices v0..vk with arcs v0->v1..->vk, endpoints attached.

    Closed ear: same arcs plus vk->v0; only v0 is attached (or none for the
    start cycle).
    """

    vertices: tuple[int, ...]
    closed: bool

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.closed:
            pairs.append((vs[-1], vs[0]))
        return pairs


@dataclass(frozen=True)
class EarDecomposition:
    ears: tuple[Ear, ...]


def validate_ear_decomposition(d: Digraph, dec: EarDecomposition) -> None:
    """Raise ValueError unless dec satisfies the three ear properties on d."""
    if not dec.ears or not dec.ears[0].closed:
        raise ValueError("first ear must be a cycle")
    seen_arcs: set[Arc] = set()
    seen_vertices: set[int] = set()
    for k, ear in enumerate(dec.ears):
        arcs = ear.arcs()
        for a in arcs:
            if a not in d.arcs:
                raise ValueError(f"ear {k} uses non-arc {a}")
            if a in seen_arcs:
                raise ValueError(f"ear {k} repeats arc {a}")
        if k == 0:
            if len(set(ear.vertices)) != len(ear.vertices):
                raise ValueError("start cycle repeats a vertex")
        elif ear.closed:
            shared = [v for v in ear.vertices if v in seen_vertices]
            if len(set(ear.vertices)) != len(ear.vertices) or shared != [ear.vertices[0]]:
                raise ValueError(f"cycle ear {k} must share exactly its anchor vertex")
        else:
            vs = ear.vertices
            if len(vs) < 2 or vs[0] == vs[-1]:
                raise ValueError(f"path ear {k} needs distinct endpoints")
            if vs[0] not in seen_vertices or vs[-1] not in seen_vertices:
                raise ValueError(f"path ear {k} endpoints must be attached")
            interior = vs[1:-1]
            if len(set(vs[:-1])) != len(vs) - 1 or any(v in seen_vertices for v in interior):
                raise ValueError(f"path ear {k} interior must be new")
        seen_arcs.update(arcs)
        seen_vertices.update(ear.vertices)
    if seen_arcs != d.arcs:
        raise ValueError("ears do not exhaust the arc set")
    if seen_vertices != set(range(d.n)):
        raise ValueError("ears do not cover all vertices")


def _some_cycle(d: Digraph) -> Cycle:
    """Deterministic cycle: smallest arc plus a shortest return path."""
    u, v = min(d.arcs)
    if (v, u) in d.arcs:
        return (u, v)
    # BFS shortest path v -> u
    prev = {v: v}
    queue = [v]
    while queue and u not in prev:
        nxt = []
        for x in queue:
            for y in d.out_neighbors[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        queue = nxt
    if u not in prev:
        raise ValueError("requires strong digraph")
    back = [u]
    while back[-1] != v:
        back.append(prev[back[-1]])
    back.reverse()  # v .. u
    return (u,) + tuple(back[:-1])


def ear_decomposition(d: Digraph, start_cycle: Optional[Cycle] = None) -> EarDecomposition:
    """Ear decomposition of a strong digraph, optionally from a given start cycle."""
    if d.n < 2 or not is_strong(d):
        raise ValueError("requires strong digraph of order >= 2")
    if start_cycle is not None:
        if not is_cycle_of(d, tuple(start_cycle)):
            raise ValueError("start_cycle is not a cycle of the digraph")
        p0 = tuple(start_cycle)
    else:
        p0 = _some_cycle(d)
    ears = [Ear(p0, closed=True)]
    covered = set(cycle_arcs(p0))
    vertices = set(p0)
    while covered != d.arcs:
        frontier = sorted(
            a for a in d.arcs - covered if a[0] in vertices and a[1] not in vertices
        )
        if frontier:
            u, v = frontier[0]
            # shortest path from v back to the current vertex set over new vertices
            prev = {v: v}
            queue = [v]
            hit = None
            while queue and hit is None:
                nxt = []
                for x in queue:
                    for y in d.out_neighbors[x]:
                        if y in vertices:
                            prev[y] = x
                            hit = y
                            break
                        if y not in prev:
                            prev[y] = x
                            nxt.append(y)
                    if hit is not None:
                        break
                queue = nxt
            assert hit is not None, "strong digraph must reach the covered part"
            chain = [hit]
            while chain[-1] != v:
                chain.append(prev[chain[-1]])
            chain.append(u)
            chain.reverse()  # u, v, ..., hit
            if hit == u:
                ears.append(Ear(tuple(chain[:-1]), closed=True))
            else:
                ears.append(Ear(tuple(chain), closed=False))
        else:
            # every uncovered arc joins two covered vertices: single-arc path ear
            u, v = min(a for a in d.arcs - covered if a[0] in vertices)
            ears.append(Ear((u, v), closed=False))
        covered.update(ears[-1].arcs())
        vertices.update(ears[-1].vertices)
    dec = EarDecomposition(tuple(ears))
    validate_ear_decomposition(d, dec)
    return dec


# ---------------------------------------------------------------------------
# Hamiltonian cycles

def hamiltonian_cycle_semicomplete(d: Digraph) -> Cycle:
    """Hamiltonian cycle of a strong semicomplete digraph by cycle extension.

    Maintains a cycle and grows it: outside vertices are inserted between
    consecutive cycle vertices when possible; otherwise the outside splits
    into a dominated set and a dominating set and an arc between them extends
    the cycle.  Order 2 yields the digon.
    """
    if d.n < 2:
        raise ValueError("requires order >= 2")
    if not is_semicomplete(d):
        raise ValueError("requires semicomplete digraph")
    if not is_strong(d):
        raise ValueError("requires strong digraph")
    if d.n == 2:
        return (0, 1)
    cyc = list(_some_cycle(d))
    while len(cyc) < d.n:
        outside = sorted(set(range(d.n)) - set(cyc))
        inserted = False
        for v in outside:
            for i in range(len(cyc)):
                a, b = cyc[i], cyc[(i + 1) % len(cyc)]
                if (a, v) in d.arcs and (v, b) in d.arcs:
                    cyc.insert(i + 1, v)
                    inserted = True
                    break
            if inserted:
                break
        if inserted:
            continue
        # no insertable vertex: each outside vertex is fully dominated by the
        # cycle (out-set) or fully dominates it (in-set); strongness forces an
        # arc from the out-set to the in-set
        out_set = [v for v in outside if all((c, v) in d.arcs for c in cyc)]
        in_set = [v for v in outside if v not in out_set]
        bridge = None
        for x in out_set:
            for y in in_set:
                if (x, y) in d.arcs:
                    bridge = (x, y)
                    break
            if bridge:
                break
        assert bridge is not None, "strong semicomplete digraph must bridge out->in"
        x, y = bridge
        cyc[1:1] = [x, y]  # c0 -> x -> y -> c1: all arcs exist by domination
    assert is_cycle_of(d, tuple(cyc))
    return tuple(cyc)


def hamiltonian_cycle_bruteforce(d: Digraph) -> Optional[Cycle]:
    """Backtracking Hamiltonian cycle search; order bound keeps it desk-scale."""
    if d.n > HAMILTON_BRUTE_BOUND:
        raise ValueError(f"order above brute-force bound {HAMILTON_BRUTE_BOUND}")
    if d.n < 2:
        return None
    n = d.n
    walk = [0]
    used = [False] * n
    used[0] = True

    def extend() -> bool:
        if len(walk) == n:
            return (walk[-1], 0) in d.arcs
        for w in d.out_neighbors[walk[-1]]:
            if not used[w]:
                walk.append(w)
                used[w] = True
                if extend():
                    return True
                walk.pop()
                used[w] = False
        return False

    return tuple(walk) if extend() else None
