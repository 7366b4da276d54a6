"""AS-level edge-list ingestion, cleaning and summary metrics.

The on-disk format is one link per line, two whitespace-separated
non-negative integer AS numbers; anything after the second token is
ignored, blank lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from .errors import ConsistencyError, ParseError

__all__ = [
    "EdgeList",
    "DegreeSequence",
    "GraphSummary",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "clean",
    "degree_sequence",
    "summarize",
    "degree_histogram",
    "FORMATS",
]


@dataclass
class EdgeList:
    """A list of ``(u, v)`` node-id pairs plus audit information.

    ``lines`` holds the source line number of each raw pair (empty after
    cleaning). ``meta`` collects counts of what a processing step removed
    or adjusted.
    """

    edges: list[tuple[int, int]]
    lines: list[int] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


@dataclass
class DegreeSequence:
    """Degrees of the nodes of a graph, aligned with their node ids."""

    degrees: np.ndarray
    nodes: np.ndarray | None = None

    def __post_init__(self):
        self.degrees = np.asarray(self.degrees, dtype=np.int64)
        if self.nodes is not None:
            self.nodes = np.asarray(self.nodes, dtype=np.int64)
            if self.nodes.shape != self.degrees.shape:
                raise ValueError("nodes and degrees must have the same length")

    def __len__(self):
        return len(self.degrees)

    def as_dict(self) -> dict[int, int]:
        ids = self.nodes if self.nodes is not None else np.arange(len(self.degrees))
        return {int(u): int(k) for u, k in zip(ids, self.degrees)}


@dataclass(frozen=True)
class GraphSummary:
    n: int
    m: int
    k_min0: int
    k_max0: int
    avg_degree0: float

    def to_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "k_min0": self.k_min0,
            "k_max0": self.k_max0,
            "avg_degree0": self.avg_degree0,
        }


def _lines(source) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def parse_edge_list(source: str | Iterable[str], name: str | None = None) -> EdgeList:
    """Parse edge-list text (a string or any iterable of lines) into raw pairs.

    Self-loops and repeated links are kept; see :func:`clean`.
    """
    edges = []
    lines = []
    for lineno, line in enumerate(_lines(source), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) < 2:
            raise ParseError(f"expected two node ids, got {text!r}", lineno, name)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node id in {text!r}", lineno, name) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative node id in {text!r}", lineno, name)
        edges.append((u, v))
        lines.append(lineno)
    return EdgeList(edges, lines)


FORMATS = {"pairs": parse_edge_list}


def read_edge_list(path: str | os.PathLike, fmt: str = "pairs") -> EdgeList:
    """Read and parse an edge-list file; parse errors carry the file name."""
    try:
        parser = FORMATS[fmt]
    except KeyError:
        raise ValueError(f"unknown edge-list format {fmt!r}") from None
    with open(path, encoding="utf-8") as fh:
        return parser(fh, name=os.fspath(path))


def write_edge_list(edges: EdgeList | Iterable[tuple[int, int]], stream: TextIO, header=None):
    if header:
        for line in header.splitlines():
            stream.write(f"# {line}\n")
    for u, v in edges:
        stream.write(f"{u} {v}\n")


def clean(raw: EdgeList | Iterable[tuple[int, int]]) -> EdgeList:
    """Drop self-loops, merge reversed and repeated links, sort canonically."""
    pairs = raw.edges if isinstance(raw, EdgeList) else list(raw)
    loops = 0
    seen = set()
    for u, v in pairs:
        if u == v:
            loops += 1
            continue
        seen.add((u, v) if u < v else (v, u))
    kept = sorted(seen)
    meta = {
        "raw_edges": len(pairs),
        "self_loops_removed": loops,
        "duplicates_removed": len(pairs) - loops - len(kept),
    }
    return EdgeList(kept, [], meta)


def degree_sequence(edges: EdgeList | Iterable[tuple[int, int]]) -> DegreeSequence:
    """Count incident links per node; nodes come out sorted by id."""
    pairs = edges.edges if isinstance(edges, EdgeList) else list(edges)
    if not pairs:
        return DegreeSequence(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    arr = np.asarray(pairs, dtype=np.int64).reshape(-1)
    nodes, counts = np.unique(arr, return_counts=True)
    return DegreeSequence(counts, nodes)


def summarize(seq: DegreeSequence, m: int) -> GraphSummary:
    """Node and link counts, observed degree range and average degree 2m/n."""
    degrees = seq.degrees if isinstance(seq, DegreeSequence) else np.asarray(seq)
    total = int(degrees.sum())
    if total != 2 * m:
        raise ConsistencyError(f"degree sum {total} differs from 2m = {2 * m}")
    n = len(degrees)
    if n == 0:
        raise ConsistencyError("cannot summarize an empty graph")
    return GraphSummary(
        n=n,
        m=int(m),
        k_min0=int(degrees.min()),
        k_max0=int(degrees.max()),
        avg_degree0=2.0 * m / n,
    )


def degree_histogram(seq: DegreeSequence | Iterable[int]) -> dict[int, int]:
    """Number of nodes per distinct degree, keys ascending."""
    degrees = seq.degrees if isinstance(seq, DegreeSequence) else np.asarray(list(seq), dtype=np.int64)
    values, counts = np.unique(degrees, return_counts=True)
    return {int(k): int(c) for k, c in zip(values, counts)}
