"""Brute-force reference computations.

These deliberately avoid the support-level shortcuts used in the main
code: they work cell by cell or part by part so they can serve as
independent checks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .partitions import Partition


def partitions_from_compositions(n: int) -> set[Partition]:
    """All partitions of n, via sorting every composition (exponential; n <= 16 or so)."""
    if n == 0:
        return {()}
    out = set()
    for cuts in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


@lru_cache(maxsize=None)
def partition_number(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_number(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_number(n - g2)
        k += 1
    return total


def cell_neighbors(lam: Partition) -> set[Partition]:
    """Move one cell between physical rows (or to a new row), re-sort, dedupe."""
    rows = list(lam)
    out = set()
    for i in range(len(rows)):
        for j in range(len(rows) + 1):
            if i == j:
                continue
            new = rows + [0]
            new[i] -= 1
            new[j] += 1
            mu = tuple(sorted((p for p in new if p > 0), reverse=True))
            if mu != lam:
                out.add(mu)
    return out


def ferrers_conjugate(lam: Partition) -> Partition:
    cells = {(i, j) for i, p in enumerate(lam) for j in range(p)}
    cols: dict[int, int] = {}
    for _, j in cells:
        cols[j] = cols.get(j, 0) + 1
    return tuple(sorted(cols.values(), reverse=True))


def bfs_components(vertices: list, adjacent) -> list[set]:
    """Connected components of the graph induced on ``vertices``."""
    remaining = set(vertices)
    comps = []
    while remaining:
        start = remaining.pop()
        comp, stack = {start}, [start]
        while stack:
            u = stack.pop()
            for w in adjacent(u):
                if w in remaining:
                    remaining.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps
