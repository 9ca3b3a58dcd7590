"""Aggregate support statistics over G_n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .partitions import rho, triangular
from .transfer import PartitionGraph, build_graph


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def groups(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for a in range(len(self.parent)):
            out.setdefault(self.find(a), []).append(a)
        return out


@dataclass(frozen=True)
class StratumSummary:
    r: int
    vertices: int
    internal_edges: int
    components: int
    min_degree: int
    max_degree: int

    def as_row(self) -> tuple[int, ...]:
        return (self.r, self.vertices, self.internal_edges, self.components,
                self.min_degree, self.max_degree)


@dataclass(frozen=True)
class ComponentReport:
    n: int
    r: int
    count: int
    sizes: tuple[int, ...]  # descending


@dataclass(frozen=True)
class LevelGraph:
    n: int
    levels: tuple[int, ...]
    adjacent_pairs: frozenset[tuple[int, int]]
    self_looped_levels: frozenset[int]

    def has_chain(self) -> bool:
        return all((r, r + 1) in self.adjacent_pairs for r in self.levels[:-1])


@dataclass(frozen=True)
class StratumAtlas:
    n: int
    strata_counts: tuple[int, ...]
    jump_counts: tuple[int, int, int]
    edge_count: int
    level_edge_matrix: tuple[tuple[int, ...], ...]
    per_stratum: tuple[StratumSummary, ...]
    component_sizes: tuple[tuple[int, ...], ...]

    @property
    def rho(self) -> int:
        return len(self.strata_counts)

    def component_counts(self) -> tuple[int, ...]:
        return tuple(s.components for s in self.per_stratum)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")


def _stratum_union_find(graph: PartitionGraph, r: int) -> tuple[list[int], UnionFind]:
    sig = graph.sigmas
    members = [i for i, s in enumerate(sig) if s == r]
    local = {v: k for k, v in enumerate(members)}
    uf = UnionFind(len(members))
    for i, j in graph.edge_indices():
        if sig[i] == r and sig[j] == r:
            uf.union(local[i], local[j])
    return members, uf


def strata_counts(n: int) -> tuple[int, ...]:
    _check_n(n)
    counts = [0] * rho(n)
    for s in build_graph(n).sigmas:
        counts[s - 1] += 1
    return tuple(counts)


def level_edge_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Symmetric ``rho(n) x rho(n)`` matrix; entry (r, s) counts edges between levels r and s."""
    _check_n(n)
    graph = build_graph(n)
    sig = graph.sigmas
    R = rho(n)
    mat = [[0] * R for _ in range(R)]
    for i, j in graph.edge_indices():
        a, b = sorted((sig[i], sig[j]))
        mat[a - 1][b - 1] += 1
    for a in range(R):
        for b in range(a):
            mat[a][b] = mat[b][a]
    return tuple(map(tuple, mat))


def jump_counts(n: int) -> tuple[int, int, int, int]:
    """``(j0, j1, j2, |E|)``: undirected edges by support-jump magnitude."""
    _check_n(n)
    j = [0, 0, 0]
    edges = build_graph(n).edges
    for e in edges:
        j[e.jump_magnitude] += 1
    return j[0], j[1], j[2], len(edges)


def stratum_components(n: int, r: int) -> ComponentReport:
    _check_n(n)
    if not 1 <= r <= rho(n):
        raise ValueError(f"r={r} outside 1..{rho(n)} for n={n}")
    _, uf = _stratum_union_find(build_graph(n), r)
    sizes = sorted((len(g) for g in uf.groups().values()), reverse=True)
    return ComponentReport(n=n, r=r, count=uf.count, sizes=tuple(sizes))


def level_graph(n: int) -> LevelGraph:
    mat = level_edge_matrix(n)
    R = len(mat)
    pairs = frozenset(
        (r + 1, s + 1) for r in range(R) for s in range(r + 1, R) if mat[r][s] > 0
    )
    loops = frozenset(r + 1 for r in range(R) if mat[r][r] > 0)
    return LevelGraph(n=n, levels=tuple(range(1, R + 1)), adjacent_pairs=pairs,
                      self_looped_levels=loops)


def stratum_degree_summary(n: int) -> tuple[StratumSummary, ...]:
    """Per support level: size, internal edges, components, and full-graph degree range."""
    _check_n(n)
    graph = build_graph(n)
    sig = graph.sigmas
    mat = level_edge_matrix(n)
    out = []
    for r in range(1, rho(n) + 1):
        members, uf = _stratum_union_find(graph, r)
        degs = [graph.degree(i) for i in members]
        out.append(StratumSummary(
            r=r,
            vertices=len(members),
            internal_edges=mat[r - 1][r - 1],
            components=uf.count,
            min_degree=min(degs),
            max_degree=max(degs),
        ))
    assert sum(s.vertices for s in out) == len(sig)
    return tuple(out)


@lru_cache(maxsize=64)
def compute_atlas(n: int) -> StratumAtlas:
    j0, j1, j2, e = jump_counts(n)
    summary = stratum_degree_summary(n)
    sizes = tuple(stratum_components(n, r).sizes for r in range(1, rho(n) + 1))
    return StratumAtlas(
        n=n,
        strata_counts=strata_counts(n),
        jump_counts=(j0, j1, j2),
        edge_count=e,
        level_edge_matrix=level_edge_matrix(n),
        per_stratum=summary,
        component_sizes=sizes,
    )


@dataclass(frozen=True)
class FirstOccurrence:
    feature: str
    expected: Optional[int]  # theoretical or previously reported value, if any
    found: Optional[int]  # None = not found up to n_max

    @property
    def matches(self) -> Optional[bool]:
        if self.expected is None or self.found is None:
            return None
        return self.expected == self.found


def first_occurrences(n_max: int, atlas_fn=compute_atlas) -> list[FirstOccurrence]:
    """Smallest n <= n_max at which each tracked feature shows up.

    For strata 4..6 two readings of "nontrivial connected" are reported
    separately: first n with a single component, and first n with a single
    component on at least two vertices.
    """
    _check_n(n_max)
    atlases = [atlas_fn(n) for n in range(1, n_max + 1)]

    def first(pred) -> Optional[int]:
        return next((a.n for a in atlases if pred(a)), None)

    def level(a: StratumAtlas, r: int, s: int) -> int:
        R = a.rho
        return a.level_edge_matrix[r - 1][s - 1] if r <= R and s <= R else 0

    def stratum(a: StratumAtlas, r: int) -> Optional[StratumSummary]:
        return a.per_stratum[r - 1] if r <= a.rho else None

    out = []
    r_top = rho(n_max) + 1
    for r in range(1, r_top + 1):
        out.append(FirstOccurrence(f"support size {r}", triangular(r),
                                   first(lambda a, r=r: r <= a.rho)))
    for r in range(1, r_top + 1):
        expected = 2 if r == 1 else triangular(r) + 1
        out.append(FirstOccurrence(f"internal edge in stratum {r}", expected,
                                   first(lambda a, r=r: level(a, r, r) > 0)))
    out.append(FirstOccurrence("jump magnitude 2", 6, first(lambda a: a.jump_counts[2] > 0)))
    for r, expected in zip(range(1, 5), (6, 10, 15, 21)):
        out.append(FirstOccurrence(f"level coupling ({r},{r + 2})", expected,
                                   first(lambda a, r=r: level(a, r, r + 2) > 0)))
    out.append(FirstOccurrence("disconnected stratum 3", 18,
                               first(lambda a: (s := stratum(a, 3)) is not None
                                     and s.components > 1)))
    for r, reported in zip((4, 5, 6), (10, 15, 22)):
        out.append(FirstOccurrence(
            f"connected stratum {r}", reported,
            first(lambda a, r=r: (s := stratum(a, r)) is not None and s.components == 1)))
        out.append(FirstOccurrence(
            f"connected stratum {r} on >= 2 vertices", reported,
            first(lambda a, r=r: (s := stratum(a, r)) is not None
                  and s.components == 1 and s.vertices >= 2)))
    return out
