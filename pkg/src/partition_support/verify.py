"""Exhaustive verification of the structural results over 1 <= n <= n_max.

Each check returns ``None`` on success or a short counterexample string.
Failures are report content, never exceptions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import atlas, transfer
from .oracles import cell_neighbors, partition_number
from .partitions import (
    Partition,
    conjugate,
    divisor_count,
    format_partition,
    is_rectangle,
    is_staircase,
    max_support_witness,
    multiplicity_partial_sums,
    rho,
    sigma,
    staircase,
    triangular,
)

JUMP_VALUES_BY = 8  # all five oriented jumps must appear for some n <= this


@dataclass
class CheckResult:
    name: str
    description: str
    per_n: dict[int, bool] = field(default_factory=dict)
    counterexample: Optional[str] = None
    skipped: bool = False

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, n: int, failure: Optional[str]) -> None:
        self.per_n[n] = failure is None
        if failure is not None and self.counterexample is None:
            self.counterexample = f"n={n}: {failure}"


@dataclass
class VerificationReport:
    n_max: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fmt(lam: Partition) -> str:
    return "(" + format_partition(lam) + ")"


def check_partition_count(n, graph):
    if len(graph.vertices) != partition_number(n):
        return f"{len(graph.vertices)} vertices, p(n)={partition_number(n)}"
    if len(set(graph.vertices)) != len(graph.vertices):
        return "duplicate partitions"
    if sum(atlas.strata_counts(n)) != partition_number(n):
        return "strata counts do not sum to p(n)"


def check_stratum_existence(n, graph):
    present = Counter(graph.sigmas)
    for r in range(1, rho(n) + 3):
        if (present[r] > 0) != (triangular(r) <= n):
            return f"r={r}: |V|={present[r]}, T_r={triangular(r)}"
    if max(present) != rho(n):
        return f"max support {max(present)} != rho(n)={rho(n)}"


def check_triangular_threshold(n, graph):
    for lam in graph.vertices:
        if n < triangular(sigma(lam)):
            return f"{_fmt(lam)} has support {sigma(lam)} below threshold"
    for r in range(1, rho(n) + 1):
        if n == triangular(r):
            stratum = [lam for lam in graph.vertices if sigma(lam) == r]
            if stratum != [staircase(r)]:
                return f"stratum {r} at its threshold is {stratum}"


def check_max_support_witness(n, graph):
    for r in range(1, rho(n) + 1):
        w = max_support_witness(n, r)
        if sum(w) != n or sigma(w) != r or len(set(w)) != len(w):
            return f"bad witness {_fmt(w)} for r={r}"


def check_degree_formula(n, graph):
    for i, lam in enumerate(graph.vertices):
        d = transfer.degree_formula(lam)
        brute = len(cell_neighbors(lam))
        if d != brute or d != graph.degree(i):
            return f"{_fmt(lam)}: formula {d}, brute force {brute}, graph degree {graph.degree(i)}"


def check_degree_floor(n, graph):
    for i, lam in enumerate(graph.vertices):
        d, s = graph.degree(i), sigma(lam)
        if d < s * (s - 1):
            return f"{_fmt(lam)}: degree {d} below {s * (s - 1)}"
        if (d == s * (s - 1)) != is_staircase(lam):
            return f"{_fmt(lam)}: floor equality does not match staircase shape"
        if n > triangular(s) and d < s * (s - 1) + 1:
            return f"{_fmt(lam)}: strict floor violated"


def check_multiplicity_update(n, graph):
    for lam in graph.vertices:
        for move in transfer.valid_moves(lam):
            mu = transfer.apply_transfer(lam, move)
            actual = Counter(mu)
            actual.subtract(Counter(lam))
            actual = Counter({t: d for t, d in actual.items() if d})
            if actual != transfer.multiplicity_delta(lam, move):
                return f"{_fmt(lam)} move {tuple(move)}"


def check_jump_formula(n, graph):
    for lam in graph.vertices:
        for move in transfer.valid_moves(lam):
            mu = transfer.apply_transfer(lam, move)
            direct = sigma(mu) - sigma(lam)
            predicted = transfer.support_jump_formula(lam, move)
            if predicted != direct or abs(direct) > 2:
                return f"{_fmt(lam)} move {tuple(move)}: formula {predicted}, direct {direct}"


def check_jump_bound(n, graph):
    for e in graph.edges:
        if e.jump_magnitude != abs(sigma(e.u) - sigma(e.v)) or e.jump_magnitude > 2:
            return f"edge {_fmt(e.u)}~{_fmt(e.v)}"


def check_adjacency_symmetry(n, graph):
    for i, nbrs in enumerate(graph.adjacency):
        for j in nbrs:
            if i not in graph.adjacency[j]:
                return f"{_fmt(graph.vertices[i])} -> {_fmt(graph.vertices[j])} not reversible"


def check_conjugation_support(n, graph):
    for lam in graph.vertices:
        c = conjugate(lam)
        if conjugate(c) != lam:
            return f"{_fmt(lam)}: conjugation not an involution"
        if sigma(c) != sigma(lam):
            return f"{_fmt(lam)}: support size changes under conjugation"
        if set(c) != set(multiplicity_partial_sums(lam)):
            return f"{_fmt(lam)}: conjugate support is not the multiplicity partial sums"


def check_conjugation_automorphism(n, graph):
    for e in graph.edges:
        a, b = graph.index[conjugate(e.u)], graph.index[conjugate(e.v)]
        if b not in graph.adjacency[a]:
            return f"edge {_fmt(e.u)}~{_fmt(e.v)} not preserved"


def check_rectangle_stratum(n, graph):
    for lam in graph.vertices:
        if (sigma(lam) == 1) != is_rectangle(lam):
            return f"{_fmt(lam)}"
        if sigma(lam) == 1 and (conjugate(lam) == lam) != (lam[0] == len(lam)):
            return f"{_fmt(lam)}: self-conjugacy does not match square shape"
    a1 = atlas.strata_counts(n)[0]
    if a1 != divisor_count(n):
        return f"a_(n,1)={a1}, d(n)={divisor_count(n)}"


def check_level_bound(n, graph):
    mat = atlas.level_edge_matrix(n)
    for r, row in enumerate(mat, 1):
        for s, v in enumerate(row, 1):
            if abs(r - s) > 2 and v:
                return f"levels ({r},{s}) joined by {v} edges"


def check_jump_matrix_consistency(n, graph):
    mat = atlas.level_edge_matrix(n)
    j = atlas.jump_counts(n)
    R = len(mat)
    for delta in range(3):
        total = sum(mat[r][r + delta] for r in range(R - delta))
        if total != j[delta]:
            return f"delta={delta}: matrix {total}, jump count {j[delta]}"
    if sum(j[:3]) != j[3]:
        return "jump counts do not sum to |E|"


def check_support_one_edges(n, graph):
    e11 = atlas.level_edge_matrix(n)[0][0]
    expected = 1 if n == 2 else 0
    if e11 != expected:
        return f"stratum 1 has {e11} internal edges"


def check_internal_edges(n, graph):
    mat = atlas.level_edge_matrix(n)
    counts = atlas.strata_counts(n)
    for r in range(2, rho(n) + 1):
        if n > triangular(r) and mat[r - 1][r - 1] < 1:
            return f"stratum {r} has no internal edge"
        if n == triangular(r) and (counts[r - 1] != 1 or mat[r - 1][r - 1] != 0):
            return f"stratum {r} at threshold is not a lone vertex"


def check_level_chain(n, graph):
    lg = atlas.level_graph(n)
    if not lg.has_chain():
        missing = [(r, r + 1) for r in lg.levels[:-1] if (r, r + 1) not in lg.adjacent_pairs]
        return f"missing level links {missing}"
    if any(abs(r - s) > 2 for r, s in lg.adjacent_pairs):
        return "level graph joins levels more than 2 apart"


PER_N_CHECKS: list[tuple[str, str, Callable]] = [
    ("partition-count", "vertex count equals p(n); strata sum to p(n)", check_partition_count),
    ("stratum-existence", "V_(n,r) nonempty iff T_r <= n; max support is rho(n)",
     check_stratum_existence),
    ("triangular-threshold", "support r needs n >= T_r; at n = T_r only the staircase",
     check_triangular_threshold),
    ("max-support-witness", "(r + n - T_r, r-1, ..., 1) has support r", check_max_support_witness),
    ("degree-formula", "closed-form degree equals neighbor count", check_degree_formula),
    ("degree-floor", "deg >= s(s-1), equality exactly on staircases, strict above T_s",
     check_degree_floor),
    ("multiplicity-update", "per-size multiplicity change of each transfer",
     check_multiplicity_update),
    ("jump-formula", "birth/death support-jump formula equals direct difference",
     check_jump_formula),
    ("jump-bound", "every edge has |jump| <= 2", check_jump_bound),
    ("adjacency-symmetry", "transfer adjacency is symmetric", check_adjacency_symmetry),
    ("conjugation-support", "conjugation is an involution preserving support size; "
     "conjugate support = multiplicity partial sums", check_conjugation_support),
    ("conjugation-automorphism", "conjugation maps edges to edges (empirical)",
     check_conjugation_automorphism),
    ("rectangle-stratum", "support 1 iff rectangle; a_(n,1) = d(n); squares are the "
     "self-conjugate rectangles", check_rectangle_stratum),
    ("level-bound", "no edges between levels more than 2 apart", check_level_bound),
    ("jump-matrix-consistency", "jump counts equal level-matrix diagonals",
     check_jump_matrix_consistency),
    ("support-one-edges", "stratum 1 has one internal edge at n=2, none for n >= 3",
     check_support_one_edges),
    ("internal-edges", "stratum r >= 2 has an internal edge for n > T_r, none at n = T_r",
     check_internal_edges),
    ("level-chain", "level graph contains the chain 1-2-...-rho(n)", check_level_chain),
]


def _check_jump_values(n_max: int) -> CheckResult:
    res = CheckResult("jump-values", f"all oriented jumps -2..2 realized for n <= {JUMP_VALUES_BY}")
    if n_max < JUMP_VALUES_BY:
        res.skipped = True
        return res
    seen: set[int] = set()
    for n in range(1, JUMP_VALUES_BY + 1):
        for lam in transfer.build_graph(n).vertices:
            for mu in transfer.neighbors(lam):
                seen.add(sigma(mu) - sigma(lam))
        res.per_n[n] = True
    missing = sorted(set(range(-2, 3)) - seen)
    if missing:
        res.counterexample = f"values {missing} never realized"
    return res


def verify_theorems(n_max: int) -> VerificationReport:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    results = [CheckResult(name, desc) for name, desc, _ in PER_N_CHECKS]
    for n in range(1, n_max + 1):
        graph = transfer.build_graph(n)
        for res, (_, _, fn) in zip(results, PER_N_CHECKS):
            res.record(n, fn(n, graph))
    results.append(_check_jump_values(n_max))
    return VerificationReport(n_max=n_max, checks=results)
