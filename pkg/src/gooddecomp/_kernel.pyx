# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel: same contract and search order as _kernel_py."""

from libc.stdint cimport uint64_t, int64_t

BACKEND = "c"

FOUND, NONE, ABORTED = 0, 1, 2

DEF MAXN = 64
DEF MAXM = 4096


cdef class _State:
    cdef uint64_t out1[MAXN]
    cdef uint64_t in1[MAXN]
    cdef uint64_t out2[MAXN]
    cdef uint64_t in2[MAXN]
    cdef int tails[MAXM]
    cdef int heads[MAXM]
    cdef char assign[MAXM]
    cdef uint64_t full
    cdef int n, m
    cdef int64_t nodes, limit
    cdef bint aborted

    cdef bint strong(self, uint64_t *rows_out, uint64_t *rows_in):
        cdef uint64_t reach, frontier, nxt, f, low
        cdef int v
        cdef uint64_t *rows
        cdef int side
        for side in range(2):
            rows = rows_out if side == 0 else rows_in
            reach = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & (~f + 1)
                    v = 0
                    while (low >> v) != 1:
                        v += 1
                    nxt |= rows[v]
                    f ^= low
                nxt &= ~reach
                reach |= nxt
                frontier = nxt
            if reach != self.full:
                return False
        return True

    cdef int rec(self, int i, int a1_used):
        cdef int t, h
        cdef uint64_t tbit, hbit
        self.nodes += 1
        if self.nodes > self.limit:
            self.aborted = True
            return 0
        if not self.strong(self.out1, self.in1) or not self.strong(self.out2, self.in2):
            return 0
        if i == self.m:
            return 1
        t = self.tails[i]
        h = self.heads[i]
        tbit = (<uint64_t>1) << t
        hbit = (<uint64_t>1) << h

        self.assign[i] = 1
        self.out2[t] &= ~hbit
        self.in2[h] &= ~tbit
        if self.rec(i + 1, a1_used + 1):
            return 1
        if self.aborted:
            return 0
        self.out2[t] |= hbit
        self.in2[h] |= tbit

        if a1_used:
            self.assign[i] = 2
            self.out1[t] &= ~hbit
            self.in1[h] &= ~tbit
            if self.rec(i + 1, a1_used):
                return 1
            if self.aborted:
                return 0
            self.out1[t] |= hbit
            self.in1[h] |= tbit

        self.assign[i] = 0
        self.out1[t] &= ~hbit
        self.in1[h] &= ~tbit
        self.out2[t] &= ~hbit
        self.in2[h] &= ~tbit
        if self.rec(i + 1, a1_used):
            return 1
        if self.aborted:
            return 0
        self.out1[t] |= hbit
        self.in1[h] |= tbit
        self.out2[t] |= hbit
        self.in2[h] |= tbit
        return 0


def search(n, arcs, budget=0):
    """See _kernel_py.search; n must be <= 64 and len(arcs) <= 4096."""
    if n > MAXN or len(arcs) > MAXM:
        raise ValueError("instance too large for the compiled kernel")
    cdef _State st = _State()
    cdef int i, t, h
    st.n = n
    st.m = len(arcs)
    st.full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0 - 1
    st.nodes = 0
    st.limit = budget if budget > 0 else (<int64_t>1) << 62
    st.aborted = False
    for i in range(st.n):
        st.out1[i] = 0
        st.in1[i] = 0
    for i in range(st.m):
        t, h = arcs[i]
        st.tails[i] = t
        st.heads[i] = h
        st.out1[t] |= (<uint64_t>1) << h
        st.in1[h] |= (<uint64_t>1) << t
    for i in range(st.n):
        st.out2[i] = st.out1[i]
        st.in2[i] = st.in1[i]

    cdef int ok = st.rec(0, 0)
    if st.aborted:
        return ABORTED, [], [], st.nodes
    if ok:
        a1 = [i for i in range(st.m) if st.assign[i] == 1]
        a2 = [i for i in range(st.m) if st.assign[i] == 2]
        return FOUND, a1, a2, st.nodes
    return NONE, [], [], st.nodes
