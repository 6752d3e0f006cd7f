# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dinic maximum flow, compiled kernel.

Same contract as ``_dinic_py.max_flow``: undirected edges with exact int64
capacities, returns the flow value and the residual source side.
"""

from libc.stdlib cimport free, malloc


def max_flow(int n, edges, int s, int t):
    if s == t:
        raise ValueError("source equals sink")
    cdef int m = len(edges)
    cdef int na = 2 * m
    cdef int *first = <int *> malloc(n * sizeof(int))
    cdef int *to = <int *> malloc(na * sizeof(int))
    cdef int *nxt = <int *> malloc(na * sizeof(int))
    cdef long long *cap = <long long *> malloc(na * sizeof(long long))
    cdef int *level = <int *> malloc(n * sizeof(int))
    cdef int *cur = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef int *stack = <int *> malloc((na + 1) * sizeof(int))
    if (first == NULL or to == NULL or nxt == NULL or cap == NULL
            or level == NULL or cur == NULL or queue == NULL or stack == NULL):
        free(<void *> first)
        free(<void *> to)
        free(<void *> nxt)
        free(<void *> cap)
        free(<void *> level)
        free(<void *> cur)
        free(<void *> queue)
        free(<void *> stack)
        raise MemoryError()

    cdef int i, a, u, v, qh, qt, sp
    cdef long long c, total = 0, bottleneck
    try:
        for i in range(n):
            first[i] = -1
        i = 0
        for eu, ev, ec in edges:
            u = eu
            v = ev
            c = ec
            to[i] = v
            cap[i] = c
            nxt[i] = first[u]
            first[u] = i
            i += 1
            to[i] = u
            cap[i] = c
            nxt[i] = first[v]
            first[v] = i
            i += 1

        while True:
            for i in range(n):
                level[i] = -1
            level[s] = 0
            queue[0] = s
            qh = 0
            qt = 1
            while qh < qt:
                u = queue[qh]
                qh += 1
                a = first[u]
                while a != -1:
                    v = to[a]
                    if cap[a] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue[qt] = v
                        qt += 1
                    a = nxt[a]
            if level[t] < 0:
                break
            for i in range(n):
                cur[i] = first[i]
            while True:
                # one augmenting path along the level graph
                sp = 0
                u = s
                bottleneck = -1
                while True:
                    if u == t:
                        bottleneck = cap[stack[0]]
                        for i in range(1, sp):
                            if cap[stack[i]] < bottleneck:
                                bottleneck = cap[stack[i]]
                        for i in range(sp):
                            a = stack[i]
                            cap[a] -= bottleneck
                            cap[a ^ 1] += bottleneck
                        total += bottleneck
                        break
                    a = cur[u]
                    while a != -1:
                        v = to[a]
                        if cap[a] > 0 and level[v] == level[u] + 1:
                            break
                        a = nxt[a]
                    if a != -1:
                        cur[u] = a
                        stack[sp] = a
                        sp += 1
                        u = to[a]
                        continue
                    cur[u] = -1
                    level[u] = -1
                    if sp == 0:
                        bottleneck = 0
                        break
                    sp -= 1
                    u = to[stack[sp] ^ 1]
                if bottleneck == 0:
                    break

        side = set()
        side.add(s)
        queue[0] = s
        qh = 0
        qt = 1
        for i in range(n):
            level[i] = 0
        level[s] = 1
        while qh < qt:
            u = queue[qh]
            qh += 1
            a = first[u]
            while a != -1:
                v = to[a]
                if cap[a] > 0 and level[v] == 0:
                    level[v] = 1
                    side.add(v)
                    queue[qt] = v
                    qt += 1
                a = nxt[a]
        return total, frozenset(side)
    finally:
        free(<void *> first)
        free(<void *> to)
        free(<void *> nxt)
        free(<void *> cap)
        free(<void *> level)
        free(<void *> cur)
        free(<void *> queue)
        free(<void *> stack)
