"""Elementary transfers and the partition transfer graph G_n.

A transfer moves one cell from a part of size ``x`` to a part of size ``y``
(``y = 0`` opens a new row) and re-sorts.  Two partitions of ``n`` are
adjacent in G_n when one is obtained from the other by a transfer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .partitions import Partition, block_form, enumerate_partitions, sigma


class TransferMove(NamedTuple):
    x: int  # source part size
    y: int  # target part size, 0 = new row


class Edge(NamedTuple):
    u: Partition  # earlier of the two in enumeration order
    v: Partition
    jump_magnitude: int


class InvalidMove(ValueError):
    pass


def _check_move(mult: dict[int, int], move: TransferMove) -> None:
    x, y = move
    if mult.get(x, 0) < 1:
        raise InvalidMove(f"source size {x} not in support")
    if y < 0 or (y > 0 and mult.get(y, 0) < 1):
        raise InvalidMove(f"target size {y} not in support")
    if x == y and mult[x] < 2:
        raise InvalidMove(f"x = y = {x} needs multiplicity >= 2")
    if (x, y) == (1, 0):
        raise InvalidMove("moving a singleton cell to a new row is the identity")


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(block_form(lam)) if lam else {}


def _rebuild(mult: dict[int, int]) -> Partition:
    out: list[int] = []
    for s in sorted(mult, reverse=True):
        out.extend([s] * mult[s])
    return tuple(out)


def _transfer(mult: dict[int, int], x: int, y: int) -> Partition:
    m = dict(mult)
    m[x] -= 1
    if y:
        m[y] -= 1
    if x > 1:
        m[x - 1] = m.get(x - 1, 0) + 1
    m[y + 1] = m.get(y + 1, 0) + 1
    return _rebuild({s: k for s, k in m.items() if k})


def apply_transfer(lam: Partition, move: TransferMove) -> Partition:
    mult = multiplicities(lam)
    _check_move(mult, move)
    return _transfer(mult, move.x, move.y)


def valid_moves(lam: Partition) -> list[TransferMove]:
    """Support-level moves whose result differs from ``lam``.

    Sources and targets range over distinct part sizes, so parts of equal
    size are not enumerated twice.  ``x = y + 1`` only swaps the two sizes
    and is skipped.
    """
    mult = multiplicities(lam)
    sizes = sorted(mult, reverse=True)
    moves = []
    for x in sizes:
        for y in sizes + [0]:
            if x == y + 1:
                continue
            if x == y and mult[x] < 2:
                continue
            moves.append(TransferMove(x, y))
    return moves


def neighbors(lam: Partition) -> set[Partition]:
    mult = multiplicities(lam)
    return {_transfer(mult, x, y) for x, y in valid_moves(lam)}


def degree_formula(lam: Partition) -> int:
    """Closed-form degree: r(r-1) + #{m_i > 1} + #{augmented gap > 1}."""
    blocks = block_form(lam)
    r = len(blocks)
    sizes = [s for s, _ in blocks] + [0]
    repeated = sum(1 for _, m in blocks if m > 1)
    wide = sum(1 for a, b in zip(sizes, sizes[1:]) if a - b > 1)
    return r * (r - 1) + repeated + wide


def support_jump_formula(lam: Partition, move: TransferMove) -> int:
    """Support change of a transfer, from births at x-1, y+1 and deaths at x, y."""
    mult = multiplicities(lam)
    _check_move(mult, move)
    x, y = move
    born_below = x > 1 and (x - 1) not in mult
    if x == y:
        return born_below + ((x + 1) not in mult) - (mult[x] == 2)
    return (
        born_below
        + ((y + 1) not in mult)
        - (x == y + 2 and (x - 1) not in mult)
        - (mult[x] == 1)
        - (y > 0 and mult[y] == 1)
    )


def multiplicity_delta(lam: Partition, move: TransferMove) -> Counter:
    """Per-size multiplicity change predicted for a valid move (zero entries dropped)."""
    x, y = move
    delta: Counter = Counter()
    delta[x] -= 1
    if y > 0:
        delta[y] -= 1
    if x > 1:
        delta[x - 1] += 1
    delta[y + 1] += 1
    return Counter({t: d for t, d in delta.items() if d})


@dataclass(frozen=True)
class PartitionGraph:
    n: int
    vertices: tuple[Partition, ...]
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]
    index: dict[Partition, int] = field(repr=False, compare=False)

    @property
    def sigmas(self) -> tuple[int, ...]:
        return tuple(map(sigma, self.vertices))

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edge_indices(self) -> list[tuple[int, int]]:
        return [(self.index[e.u], self.index[e.v]) for e in self.edges]


@lru_cache(maxsize=16)
def build_graph(n: int) -> PartitionGraph:
    if n < 1:
        raise ValueError("G_n is defined for n >= 1")
    vertices = tuple(enumerate_partitions(n))
    index = {lam: i for i, lam in enumerate(vertices)}
    sig = [sigma(lam) for lam in vertices]
    adj: list[list[int]] = [[] for _ in vertices]
    edges = []
    for i, lam in enumerate(vertices):
        for mu in neighbors(lam):
            j = index[mu]
            adj[i].append(j)
            if i < j:
                edges.append((i, j))
    edges.sort()
    return PartitionGraph(
        n=n,
        vertices=vertices,
        edges=tuple(Edge(vertices[i], vertices[j], abs(sig[i] - sig[j])) for i, j in edges),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        index=index,
    )
