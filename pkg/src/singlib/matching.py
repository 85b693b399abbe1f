"""Exact minimum-cost perfect matching on a dense bipartite cost table.

Classic Hungarian algorithm with potentials, O(n^3), run entirely on Python
integers so that results are exact and deterministic.  Missing edges are
modelled with a large integer sentinel and rejected after the fact, which
doubles as the perfect-matching feasibility test.
"""

from __future__ import annotations


def min_cost_perfect_matching(cost: list[list[int | None]]):
    """Return (assignment, total) minimizing sum cost[i][assignment[i]].

    ``cost`` is a square table of non-negative ints with None marking a
    forbidden pair.  Returns None when no perfect matching over the allowed
    pairs exists.  Deterministic for fixed input.
    """
    n = len(cost)
    if n == 0:
        return [], 0
    if any(len(row) != n for row in cost):
        raise ValueError("cost table must be square")
    big = 1 + sum(c for row in cost for c in row if c is not None)
    a = [[big if c is None else int(c) for c in row] for row in cost]

    INF = big * (n + 1)
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j] = row matched to column j; columns 1..n
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = -1
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = a[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assign = [0] * n
    for j in range(1, n + 1):
        assign[p[j] - 1] = j - 1
    total = 0
    for i, j in enumerate(assign):
        if cost[i][j] is None:
            return None
        total += cost[i][j]
    return assign, total
