"""Canonical integer partitions and their support data.

A partition is a plain tuple of positive integers in weakly decreasing
order, e.g. ``(4, 4, 1, 1)``.  The empty tuple is the partition of 0.
Block form and all support quantities are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, groupby
from math import isqrt
from typing import Iterator, Sequence

Partition = tuple[int, ...]
BlockForm = tuple[tuple[int, int], ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple.

    Raises ValueError if a part is not a positive integer or the parts are
    not weakly decreasing.
    """
    out = tuple(int(p) for p in parts)
    if any(p < 1 for p in out):
        raise ValueError(f"partition parts must be positive: {out}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {out}")
    return out


def parse_partition(text: str) -> Partition:
    """Parse ``"4+3+1"`` (also accepts commas) into a partition."""
    pieces = [p for p in text.replace(",", "+").split("+") if p.strip()]
    return make_partition(int(p) for p in pieces)


def format_partition(lam: Partition) -> str:
    return "+".join(map(str, lam))


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield all partitions of ``n`` in reverse-lexicographic order.

    ``(n), (n-1, 1), (n-2, 2), (n-2, 1, 1), ...`` ending with ``(1,)*n``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        # trailing ones get folded back into the rightmost part > 1
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        v = a.pop() - 1
        rest = ones + 1
        q, rem = divmod(rest, v)
        a.append(v)
        a.extend([v] * q)
        if rem:
            a.append(rem)


def enumerate_partitions(n: int) -> list[Partition]:
    return list(iter_partitions(n))


def block_form(lam: Partition) -> BlockForm:
    """Run-length encode ``lam`` as ``((s_1, m_1), ..., (s_r, m_r))``."""
    if not lam:
        raise ValueError("the empty partition has no block form")
    return tuple((s, sum(1 for _ in grp)) for s, grp in groupby(lam))


def sigma(lam: Partition) -> int:
    """Support size: the number of distinct part sizes."""
    return len(set(lam))


@dataclass(frozen=True)
class SupportProfile:
    support: frozenset[int]
    sigma: int
    profile: tuple[int, ...]
    mult: tuple[int, ...]
    gaps: tuple[int, ...]
    augmented_gaps: tuple[int, ...]


def support_profile(lam: Partition) -> SupportProfile:
    blocks = block_form(lam)
    sizes = tuple(s for s, _ in blocks)
    mult = tuple(m for _, m in blocks)
    gaps = tuple(a - b for a, b in zip(sizes, sizes[1:]))
    return SupportProfile(
        support=frozenset(sizes),
        sigma=len(sizes),
        profile=sizes,
        mult=mult,
        gaps=gaps,
        augmented_gaps=gaps + (sizes[-1],),
    )


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram."""
    if not lam:
        return ()
    # column j has height #{i : lam[i] > j}; lam is decreasing so scan from the end
    out = []
    k = len(lam)
    for j in range(lam[0]):
        while lam[k - 1] <= j:
            k -= 1
        out.append(k)
    return tuple(out)


def triangular(r: int) -> int:
    return r * (r + 1) // 2


def rho(n: int) -> int:
    """Largest r with triangular(r) <= n."""
    if n < 1:
        raise ValueError("rho is defined for n >= 1")
    r = (isqrt(8 * n + 1) - 1) // 2
    return r


def max_support_witness(n: int, r: int) -> Partition:
    """The partition ``(r + n - T_r, r-1, ..., 2, 1)`` of ``n`` with support size ``r``."""
    if r < 1:
        raise ValueError("r must be positive")
    t = n - triangular(r)
    if t < 0:
        raise ValueError(f"support size {r} infeasible for n={n}")
    return (r + t,) + tuple(range(r - 1, 0, -1))


def staircase(r: int) -> Partition:
    return tuple(range(r, 0, -1))


def is_staircase(lam: Partition) -> bool:
    return bool(lam) and lam == staircase(len(lam))


def is_rectangle(lam: Partition) -> bool:
    return bool(lam) and lam[0] == lam[-1]


def divisor_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            count += 1 if d * d == n else 2
    return count


def multiplicity_partial_sums(lam: Partition) -> tuple[int, ...]:
    """``(M_1, ..., M_r)`` with ``M_j = m_1 + ... + m_j``; the support of the conjugate."""
    return tuple(accumulate(m for _, m in block_form(lam)))
