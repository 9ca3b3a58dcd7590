"""Table rendering (CSV / JSON / Markdown), DOT export, and the per-n JSON cache."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from .atlas import StratumAtlas, StratumSummary, compute_atlas
from .partitions import format_partition, rho
from .transfer import PartitionGraph

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FORMATS = ("csv", "json", "md")
MIN_COMPONENT_COLUMNS = 6


@dataclass(frozen=True)
class AtlasRecord:
    atlas: StratumAtlas
    schema_version: int = SCHEMA_VERSION
    generated_at: Optional[str] = field(default=None, compare=False)

    def content(self) -> dict:
        a = self.atlas
        return {
            "schema_version": self.schema_version,
            "n": a.n,
            "strata_counts": list(a.strata_counts),
            "jump_counts": list(a.jump_counts),
            "edge_count": a.edge_count,
            "level_edge_matrix": [list(row) for row in a.level_edge_matrix],
            "per_stratum": [asdict(s) for s in a.per_stratum],
            "component_sizes": [list(s) for s in a.component_sizes],
        }

    def content_hash(self) -> str:
        blob = json.dumps(self.content(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self) -> str:
        doc = self.content()
        doc["generated_at"] = self.generated_at
        return json.dumps(doc, sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "AtlasRecord":
        doc = json.loads(text)
        atlas = StratumAtlas(
            n=doc["n"],
            strata_counts=tuple(doc["strata_counts"]),
            jump_counts=tuple(doc["jump_counts"]),
            edge_count=doc["edge_count"],
            level_edge_matrix=tuple(tuple(row) for row in doc["level_edge_matrix"]),
            per_stratum=tuple(StratumSummary(**s) for s in doc["per_stratum"]),
            component_sizes=tuple(tuple(s) for s in doc["component_sizes"]),
        )
        return cls(atlas=atlas, schema_version=doc["schema_version"],
                   generated_at=doc.get("generated_at"))


class AtlasCache:
    """One JSON file per n, named by n and schema version."""

    def __init__(self, directory: os.PathLike | str):
        self.directory = Path(directory)

    def path(self, n: int) -> Path:
        return self.directory / f"atlas_n{n:04d}_v{SCHEMA_VERSION}.json"

    def get(self, n: int) -> Optional[AtlasRecord]:
        path = self.path(n)
        if not path.exists():
            return None
        try:
            record = AtlasRecord.from_json(path.read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            logger.warning("ignoring unreadable cache file %s: %s", path, exc)
            return None
        if record.schema_version != SCHEMA_VERSION or record.atlas.n != n:
            logger.warning("ignoring stale cache file %s", path)
            return None
        return record

    def put(self, record: AtlasRecord) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        target = self.path(record.atlas.n)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=target.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(record.to_json())
            os.replace(tmp, target)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise


def get_atlas(n: int, cache: Optional[AtlasCache] = None) -> StratumAtlas:
    if cache is not None:
        hit = cache.get(n)
        if hit is not None:
            return hit.atlas
    atlas = compute_atlas(n)
    if cache is not None:
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        cache.put(AtlasRecord(atlas, generated_at=stamp))
    return atlas


# -- tables ---------------------------------------------------------------

Table = tuple[list[str], list[list[int]]]


def _pad(values: Sequence[int], width: int) -> list[int]:
    return list(values) + [0] * (width - len(values))


def strata_table(atlases: Sequence[StratumAtlas]) -> Table:
    R = rho(max(a.n for a in atlases))
    header = ["n"] + [f"a{r}" for r in range(1, R + 1)]
    return header, [[a.n] + _pad(a.strata_counts, R) for a in atlases]


def jumps_table(atlases: Sequence[StratumAtlas]) -> Table:
    header = ["n", "j0", "j1", "j2", "edges"]
    return header, [[a.n, *a.jump_counts, a.edge_count] for a in atlases]


def components_table(atlases: Sequence[StratumAtlas]) -> Table:
    R = max(MIN_COMPONENT_COLUMNS, rho(max(a.n for a in atlases)))
    header = ["n"] + [f"comp{r}" for r in range(1, R + 1)]
    return header, [[a.n] + _pad(a.component_counts(), R) for a in atlases]


def summary_table(atlas: StratumAtlas) -> Table:
    header = ["r", "vertices", "internal_edges", "components", "min_deg", "max_deg"]
    return header, [list(s.as_row()) for s in atlas.per_stratum]


def level_matrix_table(atlas: StratumAtlas) -> Table:
    R = atlas.rho
    header = ["r"] + [str(s) for s in range(1, R + 1)]
    return header, [[r] + list(row) for r, row in enumerate(atlas.level_edge_matrix, 1)]


def render(table: Table, fmt: str) -> str:
    header, rows = table
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(map(str, row)) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=1) + "\n"
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join("---:" for _ in header) + "|"]
        lines += ["| " + " | ".join(map(str, row)) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv_table(text: str) -> Table:
    lines = [ln for ln in text.splitlines() if ln]
    header = lines[0].split(",")
    return header, [[int(v) for v in ln.split(",")] for ln in lines[1:]]


# -- DOT ------------------------------------------------------------------

_LEVEL_COLORS = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
                 "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd")
_JUMP_COLORS = ("#999999", "#1f77b4", "#d62728")


def write_dot(graph: PartitionGraph, out: TextIO, color_by: str = "sigma",
              label_edges: bool = True) -> None:
    if color_by not in ("sigma", "jump"):
        raise ValueError("color_by must be 'sigma' or 'jump'")
    sig = graph.sigmas
    out.write(f"graph G_{graph.n} {{\n")
    out.write("  node [shape=box, style=filled, fontname=Helvetica];\n")
    for r in range(1, max(sig) + 1):
        out.write(f"  subgraph cluster_support_{r} {{\n    label=\"support {r}\";\n")
        for i, lam in enumerate(graph.vertices):
            if sig[i] != r:
                continue
            fill = _LEVEL_COLORS[(r - 1) % len(_LEVEL_COLORS)] if color_by == "sigma" else "white"
            out.write(f"    v{i} [label=\"{format_partition(lam)}\", fillcolor=\"{fill}\"];\n")
        out.write("  }\n")
    for e in graph.edges:
        attrs = []
        if label_edges:
            attrs.append(f"label=\"{e.jump_magnitude}\"")
        if color_by == "jump":
            attrs.append(f"color=\"{_JUMP_COLORS[e.jump_magnitude]}\"")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        out.write(f"  v{graph.index[e.u]} -- v{graph.index[e.v]}{suffix};\n")
    out.write("}\n")


def dot_counts(text: str) -> tuple[int, int]:
    """(node count, edge count) of a DOT document written by :func:`write_dot`."""
    nodes = sum(1 for ln in text.splitlines() if ln.strip().startswith("v") and "[label=" in ln
                and "--" not in ln)
    edges = sum(1 for ln in text.splitlines() if " -- " in ln)
    return nodes, edges


def atlases_for(ns: Iterable[int], cache: Optional[AtlasCache] = None) -> list[StratumAtlas]:
    return [get_atlas(n, cache) for n in ns]

