"""Synthetic degree sequences and graphs drawn from a bounded power law."""
from __future__ import annotations

import numpy as np

from .errors import DomainError, InfeasibleError
from .ingest import DegreeSequence, EdgeList
from .powerlaw import BoundedPowerLaw

__all__ = ["make_rng", "sample_degrees", "configuration_model"]


def make_rng(seed=None) -> np.random.Generator:
    """PCG64 generator; the same integer seed gives the same stream everywhere."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def sample_degrees(d: BoundedPowerLaw, n: int, rng=None) -> DegreeSequence:
    """Draw ``n`` independent degrees by inverse-CDF sampling."""
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    rng = make_rng(rng)
    u = rng.random(n)
    return DegreeSequence(d.quantile(u), np.arange(n, dtype=np.int64))


def _canon(u, v):
    return (u, v) if u < v else (v, u)


def configuration_model(seq: DegreeSequence, rng=None, simple: bool = True, max_swaps: int | None = None) -> EdgeList:
    """Random stub matching for the degree sequence ``seq``.

    An odd degree sum is made even by adding one stub to a uniformly chosen
    node. With ``simple`` set, self-loops and repeated links are repaired by
    random double-edge swaps with other links; whatever survives
    ``max_swaps`` attempts is dropped. ``meta`` of the result records the
    parity fix, the number of dropped links and the realized degrees.
    """
    rng = make_rng(rng)
    degrees = np.array(seq.degrees, dtype=np.int64)
    nodes = seq.nodes if seq.nodes is not None else np.arange(len(degrees), dtype=np.int64)
    if np.any(degrees < 0):
        raise DomainError("degrees must be non-negative")
    meta = {"parity_adjusted_node": None, "edges_dropped": 0, "swaps": 0}

    if degrees.sum() % 2:
        i = int(rng.integers(len(degrees)))
        degrees[i] += 1
        meta["parity_adjusted_node"] = int(nodes[i])

    total = int(degrees.sum())
    if simple and total:
        top = int(degrees.max())
        active = int(np.count_nonzero(degrees))
        if top > total - top or top > active - 1:
            raise InfeasibleError(
                f"max degree {top} cannot be matched without loops or repeats "
                f"({total - top} other stubs on {active - 1} other nodes)"
            )

    stubs = np.repeat(nodes, degrees)
    rng.shuffle(stubs)
    pairs = [(int(a), int(b)) for a, b in stubs.reshape(-1, 2)]

    if simple and pairs:
        pairs = _repair(pairs, rng, meta, max_swaps)

    realized = {}
    for u, v in pairs:
        realized[u] = realized.get(u, 0) + 1
        realized[v] = realized.get(v, 0) + 1
    meta["realized_degrees"] = realized
    return EdgeList(pairs, [], meta)


def _repair(pairs, rng, meta, max_swaps):
    counts = {}
    for u, v in pairs:
        key = _canon(u, v)
        counts[key] = counts.get(key, 0) + 1

    def is_bad(i):
        u, v = pairs[i]
        return u == v or counts[_canon(u, v)] > 1

    bad = [i for i in range(len(pairs)) if is_bad(i)]
    budget = max_swaps if max_swaps is not None else 100 * max(len(bad), 1) + 1000
    swaps = 0
    m = len(pairs)
    while bad and swaps < budget:
        i = bad.pop()
        if not is_bad(i):
            continue
        fixed = False
        for _ in range(50):
            if swaps >= budget:
                break
            swaps += 1
            j = int(rng.integers(m))
            if j == i:
                continue
            u, v = pairs[i]
            x, y = pairs[j]
            if rng.random() < 0.5:
                x, y = y, x
            e1, e2 = _canon(u, x), _canon(v, y)
            if u == x or v == y or e1 == e2 or counts.get(e1, 0) or counts.get(e2, 0):
                continue
            for key in (_canon(u, v), _canon(x, y)):
                counts[key] -= 1
                if not counts[key]:
                    del counts[key]
            counts[e1] = 1
            counts[e2] = 1
            pairs[i] = (u, x)
            pairs[j] = (v, y)
            fixed = True
            break
        if not fixed:
            bad.insert(0, i)
    meta["swaps"] = swaps

    # drop leftovers: every loop, and all but one copy of each repeated link
    kept, seen = [], set()
    for u, v in pairs:
        key = _canon(u, v)
        if u == v or key in seen:
            meta["edges_dropped"] += 1
            continue
        seen.add(key)
        kept.append((u, v))
    return kept
