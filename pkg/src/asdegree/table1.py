"""Published summary metrics of the eight BGP-derived AS snapshots.

Only aggregate values are stored; the raw edge lists are not distributed.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .ingest import DegreeSequence


class SnapshotMetrics(NamedTuple):
    name: str
    n: int
    m: int
    k_min0: int
    k_max0: int
    avg_degree0: float
    lam: float
    k_min: int
    k_max: int


TABLE1 = (
    SnapshotMetrics("AS1", 12694, 26559, 1, 2566, 4.18, 2.24, 1, 2031),
    SnapshotMetrics("AS2", 7690, 15413, 1, 1713, 4.01, 2.26, 1, 1225),
    SnapshotMetrics("AS3", 8689, 17709, 1, 1911, 4.08, 2.25, 1, 1378),
    SnapshotMetrics("AS4", 8904, 17653, 1, 1921, 3.97, 2.25, 1, 1417),
    SnapshotMetrics("AS5", 8063, 16520, 1, 1833, 4.10, 2.26, 1, 1289),
    SnapshotMetrics("AS6", 10476, 21113, 1, 2274, 4.03, 2.25, 1, 1666),
    SnapshotMetrics("AS7", 12694, 26559, 1, 2566, 4.18, 2.24, 1, 2031),
    SnapshotMetrics("AS8", 12741, 26888, 1, 2557, 4.22, 2.24, 1, 2051),
)

# Low-degree shares pooled over the snapshots (degrees 1, 2, 3).
LOW_DEGREE_SHARES = (0.346, 0.406, 0.11)


def fixture_degree_sequence(row: SnapshotMetrics) -> DegreeSequence:
    """A deterministic degree sequence matching a row's n, m and degree range.

    One node carries ``k_max0``, one carries ``k_min0`` and the remaining
    degree mass is spread as evenly as possible over the other nodes. It
    stands in for the unavailable raw data wherever only those aggregates
    matter.
    """
    n, total = row.n, 2 * row.m
    rest = total - row.k_max0 - row.k_min0
    others = n - 2
    if others < 0 or rest < row.k_min0 * others or rest > row.k_max0 * others:
        raise ValueError(f"{row.name}: no degree sequence with these aggregates")
    q, r = divmod(rest, others)
    degrees = np.full(others, q, dtype=np.int64)
    degrees[:r] += 1
    degrees = np.concatenate(([row.k_max0, row.k_min0], degrees))
    return DegreeSequence(degrees, np.arange(n, dtype=np.int64))
