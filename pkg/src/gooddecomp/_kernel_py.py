"""Pure-Python twin of the compiled search kernel.

Backtracks over arc assignments to (side 1, side 2, unused).  For each side
it maintains bitmask adjacency rows of "arcs still available to that side"
(assigned to it or unassigned); a branch is pruned as soon as either
availability digraph stops being strong, which also is the leaf test.
Assigning to side 2 is forbidden until side 1 holds an arc (swap symmetry).
"""

from __future__ import annotations

BACKEND = "python"

FOUND, NONE, ABORTED = 0, 1, 2


class _Abort(Exception):
    pass


def search(n, arcs, budget=0):
    """Search for two disjoint arc sets, both strong and spanning.

    arcs: sequence of (tail, head) defining the assignment order.
    budget: node limit, <= 0 means unlimited.
    Returns (status, a1_indices, a2_indices, nodes_explored).
    """
    m = len(arcs)
    full = (1 << n) - 1
    limit = budget if budget > 0 else float("inf")

    out1 = [0] * n
    in1 = [0] * n
    for t, h in arcs:
        out1[t] |= 1 << h
        in1[h] |= 1 << t
    out2 = out1[:]
    in2 = in1[:]

    assign = [0] * m
    nodes = 0

    def strong(rows_out, rows_in) -> bool:
        for rows in (rows_out, rows_in):
            reach = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= rows[low.bit_length() - 1]
                    f ^= low
                nxt &= ~reach
                reach |= nxt
                frontier = nxt
            if reach != full:
                return False
        return True

    def rec(i: int, a1_used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _Abort
        if not strong(out1, in1) or not strong(out2, in2):
            return False
        if i == m:
            return True
        t, h = arcs[i]
        hbit, tbit = 1 << h, 1 << t

        assign[i] = 1
        out2[t] &= ~hbit
        in2[h] &= ~tbit
        if rec(i + 1, a1_used + 1):
            return True
        out2[t] |= hbit
        in2[h] |= tbit

        if a1_used:
            assign[i] = 2
            out1[t] &= ~hbit
            in1[h] &= ~tbit
            if rec(i + 1, a1_used):
                return True
            out1[t] |= hbit
            in1[h] |= tbit

        assign[i] = 0
        out1[t] &= ~hbit
        in1[h] &= ~tbit
        out2[t] &= ~hbit
        in2[h] &= ~tbit
        if rec(i + 1, a1_used):
            return True
        out1[t] |= hbit
        in1[h] |= tbit
        out2[t] |= hbit
        in2[h] |= tbit
        return False

    try:
        if rec(0, 0):
            a1 = [i for i in range(m) if assign[i] == 1]
            a2 = [i for i in range(m) if assign[i] == 2]
            return FOUND, a1, a2, nodes
        return NONE, [], [], nodes
    except _Abort:
        return ABORTED, [], [], nodes
