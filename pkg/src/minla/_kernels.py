"""Compiled inner loops. All arrays are 0-based CSR (``indptr``, ``indices``)."""

import numpy as np
from numba import njit


@njit(cache=True)
def _rank_sorted_adjacency(n, indptr, indices, priority):
    # Rows re-listed in priority order: visit vertices by priority and append
    # each one to its neighbours' rows. Linear time, no comparison sort.
    out = np.empty_like(indices)
    fill = indptr[:-1].copy()
    for i in range(n):
        u = priority[i]
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            out[fill[w]] = u
            fill[w] += 1
    return out


@njit(cache=True)
def lex_bfs(n, indptr, indices, priority):
    """Lexicographic BFS by stable partition refinement.

    ``priority`` lists all vertices; among equally labelled candidates the one
    listed first is visited first. Classes are doubly linked lists kept in
    priority order, so the head of the first class is always the next vertex.
    """
    adj = _rank_sorted_adjacency(n, indptr, indices, priority)

    nxt = np.full(n, -1, np.int64)
    prv = np.full(n, -1, np.int64)
    cls = np.zeros(n, np.int64)
    visited = np.zeros(n, np.bool_)

    cap = 2 * n + 1
    head = np.full(cap, -1, np.int64)
    tail = np.full(cap, -1, np.int64)
    size = np.zeros(cap, np.int64)
    cnext = np.full(cap, -1, np.int64)
    cprev = np.full(cap, -1, np.int64)
    split_to = np.full(cap, -1, np.int64)
    stamp = np.full(cap, -1, np.int64)
    free = np.empty(cap, np.int64)
    nfree = 0
    for c in range(cap - 1, 0, -1):
        free[nfree] = c
        nfree += 1
    touched = np.empty(n, np.int64)

    out = np.empty(n, np.int64)
    if n == 0:
        return out

    for i in range(n):
        v = priority[i]
        prv[v] = priority[i - 1] if i > 0 else -1
        nxt[v] = priority[i + 1] if i + 1 < n else -1
    head[0] = priority[0]
    tail[0] = priority[n - 1]
    size[0] = n
    first = 0

    for step in range(n):
        c = first
        v = head[c]
        # detach v from its class
        head[c] = nxt[v]
        if nxt[v] != -1:
            prv[nxt[v]] = -1
        else:
            tail[c] = -1
        size[c] -= 1
        if size[c] == 0:
            first = cnext[c]
            if first != -1:
                cprev[first] = -1
            free[nfree] = c
            nfree += 1
        visited[v] = True
        out[step] = v

        ntouched = 0
        for k in range(indptr[v], indptr[v + 1]):
            w = adj[k]
            if visited[w]:
                continue
            x = cls[w]
            if stamp[x] != step:
                stamp[x] = step
                nfree -= 1
                y = free[nfree]
                head[y] = -1
                tail[y] = -1
                size[y] = 0
                stamp[y] = step
                # insert y right before x in the class list
                cprev[y] = cprev[x]
                cnext[y] = x
                if cprev[x] != -1:
                    cnext[cprev[x]] = y
                else:
                    first = y
                cprev[x] = y
                split_to[x] = y
                touched[ntouched] = x
                ntouched += 1
            y = split_to[x]
            # unlink w from x
            if prv[w] != -1:
                nxt[prv[w]] = nxt[w]
            else:
                head[x] = nxt[w]
            if nxt[w] != -1:
                prv[nxt[w]] = prv[w]
            else:
                tail[x] = prv[w]
            size[x] -= 1
            # append w to y
            prv[w] = tail[y]
            nxt[w] = -1
            if tail[y] != -1:
                nxt[tail[y]] = w
            else:
                head[y] = w
            tail[y] = w
            size[y] += 1
            cls[w] = y

        for t in range(ntouched):
            x = touched[t]
            if size[x] == 0:
                if cprev[x] != -1:
                    cnext[cprev[x]] = cnext[x]
                else:
                    first = cnext[x]
                if cnext[x] != -1:
                    cprev[cnext[x]] = cprev[x]
                free[nfree] = x
                nfree += 1
    return out


@njit(cache=True)
def umbrella_ok(n, indptr, indices, pos):
    """True iff every closed neighbourhood occupies consecutive positions."""
    for v in range(n):
        lo = pos[v]
        hi = pos[v]
        for k in range(indptr[v], indptr[v + 1]):
            p = pos[indices[k]]
            if p < lo:
                lo = p
            elif p > hi:
                hi = p
        if hi - lo != indptr[v + 1] - indptr[v]:
            return False
    return True


@njit(cache=True)
def right_reach(n, indptr, indices, order, pos):
    """For layout slot i, the last slot holding a closed neighbour of ``order[i]``."""
    r = np.empty(n, np.int64)
    for i in range(n):
        v = order[i]
        hi = i
        for k in range(indptr[v], indptr[v + 1]):
            p = pos[indices[k]]
            if p > hi:
                hi = p
        r[i] = hi
    return r
