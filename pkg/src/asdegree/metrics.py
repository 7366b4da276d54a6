"""Connectivity metrics derived from a bounded power law.

Covers the shares of minimum- and maximum-degree nodes, the curve relating
the fraction of best-connected nodes to the fraction of degree they hold,
the closed-form comparators used for benchmarking, and parameter sweeps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError
from .powerlaw import BoundedPowerLaw

__all__ = [
    "RichPoint",
    "SweepTable",
    "XPP_MIN_RATIO",
    "METRICS",
    "ratio_min_degree",
    "ratio_max_degree",
    "rich_fractions",
    "rich_curve",
    "degrees_at_top_fraction",
    "newman_mean_degree",
    "newman_rich_fraction",
    "xpp_min_ratio_reference",
    "param_range",
    "sweep",
]

# Published share of minimum-degree nodes under the XPP model; the formula
# behind it is not reproduced here.
XPP_MIN_RATIO = 0.608


@dataclass(frozen=True)
class RichPoint:
    threshold_k: int
    r_nodes: float
    r_degrees: float


def ratio_min_degree(d: BoundedPowerLaw) -> float:
    """Fraction of nodes whose degree equals ``k_min``."""
    return d.pmf(d.k_min)


def ratio_max_degree(d: BoundedPowerLaw) -> float:
    """Fraction of nodes whose degree equals ``k_max``."""
    return d.pmf(d.k_max)


def rich_fractions(d: BoundedPowerLaw, k: int) -> RichPoint:
    """Share of nodes with degree >= k and the share of degree they hold."""
    i = d._index(k)
    return RichPoint(int(k), float(d.ccdf_array[i]), float(d.degree_ccdf_array[i]))


def _rich_arrays(d: BoundedPowerLaw):
    # ordered from k_max down to k_min, so r_nodes increases along the arrays
    k = d.support[::-1]
    return k, d.ccdf_array[::-1], d.degree_ccdf_array[::-1]


def rich_curve(d: BoundedPowerLaw) -> list[RichPoint]:
    """All (R_nodes, R_degrees) points, from the top degree down to ``k_min``."""
    k, rn, rd = _rich_arrays(d)
    return [RichPoint(int(a), float(b), float(c)) for a, b, c in zip(k, rn, rd)]


def degrees_at_top_fraction(d: BoundedPowerLaw, target_r_nodes: float) -> float:
    """Share of total degree held by the best-connected ``target_r_nodes`` of nodes.

    The boundary degree class is included fractionally, which is the same as
    interpolating linearly between neighbouring points of :func:`rich_curve`
    (with an implicit origin before the top class).
    """
    t = float(target_r_nodes)
    if not 0.0 < t <= 1.0:
        raise DomainError(f"target fraction must lie in (0, 1], got {target_r_nodes!r}")
    _, rn, rd = _rich_arrays(d)
    if t == 1.0:
        return 1.0
    xs = np.concatenate(([0.0], rn))
    ys = np.concatenate(([0.0], rd))
    j = int(np.searchsorted(xs, t, side="left"))
    x0, x1 = xs[j - 1], xs[j]
    y0, y1 = ys[j - 1], ys[j]
    if x1 == x0:
        return float(y1)
    return float(y0 + (t - x0) * (y1 - y0) / (x1 - x0))


def newman_mean_degree(lam: float, k_min: int) -> float:
    """Mean degree of the unbounded continuous approximation, (lam-1)/(lam-2)*k_min."""
    if not lam > 2.0:
        raise DomainError(f"mean degree diverges for exponent <= 2, got {lam}")
    return (lam - 1.0) / (lam - 2.0) * k_min


def newman_rich_fraction(lam: float, r_nodes: float) -> float:
    """Closed-form degree share of the top ``r_nodes``: r_nodes**((lam-2)/(lam-1))."""
    if not lam > 2.0:
        raise DomainError(f"closed form requires exponent > 2, got {lam}")
    if not 0.0 < r_nodes <= 1.0:
        raise DomainError(f"node fraction must lie in (0, 1], got {r_nodes}")
    return float(r_nodes) ** ((lam - 2.0) / (lam - 1.0))


def xpp_min_ratio_reference(*_args) -> float:
    """Comparator share of minimum-degree nodes; constant in every parameter."""
    return XPP_MIN_RATIO


# -- sweeps -------------------------------------------------------------------

METRICS = {
    "mean_degree": BoundedPowerLaw.mean_degree,
    "ratio_min_degree": ratio_min_degree,
    "ratio_max_degree": ratio_max_degree,
}
# forward difference of the mean degree along the varied parameter
DERIVED_METRICS = ("mean_degree_increase",)
PARAMETERS = ("lambda", "k_min", "k_max")


@dataclass
class SweepTable:
    metric: str
    varied_parameter: str
    fixed: dict
    rows: list[tuple[float, float]] = field(default_factory=list)
    decay_exponent: float | None = None
    fit_window: tuple[float, float] | None = None

    @property
    def values(self) -> np.ndarray:
        return np.array([r[0] for r in self.rows], dtype=float)

    @property
    def metric_values(self) -> np.ndarray:
        return np.array([r[1] for r in self.rows], dtype=float)


def param_range(start, stop, step) -> list:
    """Inclusive arithmetic range; integers stay integers."""
    if step <= 0:
        raise DomainError("range step must be positive")
    if stop < start:
        raise DomainError(f"empty range {start}..{stop}")
    if all(isinstance(v, (int, np.integer)) for v in (start, stop, step)):
        return list(range(int(start), int(stop) + 1, int(step)))
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def _distribution(varied, value, fixed):
    params = {"lambda": None, "k_min": None, "k_max": None}
    params.update(fixed)
    params[varied] = value
    missing = [p for p, v in params.items() if v is None]
    if missing:
        raise DomainError(f"sweep needs fixed values for {', '.join(missing)}")
    return BoundedPowerLaw(params["lambda"], params["k_min"], params["k_max"])


def _default_window(varied, fixed):
    # the power-law regimes: low k_min (<= k_max/30) and large k_max (>= 10 k_min)
    if varied == "k_min":
        return (1, fixed["k_max"] / 30.0)
    if varied == "k_max":
        return (10 * fixed["k_min"], math.inf)
    return (-math.inf, math.inf)


def sweep(
    metric: str,
    varied: str,
    values: Iterable,
    fixed: dict,
    fit_decay: bool = False,
    window: Sequence[float] | None = None,
) -> SweepTable:
    """Evaluate ``metric`` over ``values`` of one parameter, the other two fixed.

    ``fixed`` maps the remaining parameter names (``"lambda"``, ``"k_min"``,
    ``"k_max"``) to values. With ``fit_decay`` the decay exponent is the
    negated slope of a least-squares line through (log value, log metric)
    restricted to ``window`` (inclusive); it stays ``None`` when fewer than
    three rows fall inside the window.
    """
    if varied not in PARAMETERS:
        raise DomainError(f"unknown parameter {varied!r}; expected one of {PARAMETERS}")
    if metric not in METRICS and metric not in DERIVED_METRICS:
        raise DomainError(f"unknown metric {metric!r}")
    fixed = {k: v for k, v in fixed.items() if k != varied}
    xs = sorted(values)
    if not xs:
        raise DomainError("sweep range is empty")

    if metric == "mean_degree_increase":
        means = [_distribution(varied, x, fixed).mean_degree() for x in xs]
        rows = [
            (xs[i], (means[i + 1] - means[i]) / (xs[i + 1] - xs[i]))
            for i in range(len(xs) - 1)
        ]
    else:
        fn = METRICS[metric]
        rows = [(x, float(fn(_distribution(varied, x, fixed)))) for x in xs]

    table = SweepTable(metric, varied, dict(fixed), rows)
    if fit_decay:
        lo, hi = window if window is not None else _default_window(varied, fixed)
        sel = [(x, y) for x, y in rows if lo <= x <= hi and x > 0 and y > 0]
        table.fit_window = (lo, hi)
        if len(sel) >= 3:
            lx = np.log([x for x, _ in sel])
            ly = np.log([y for _, y in sel])
            slope = np.polyfit(lx, ly, 1)[0]
            table.decay_exponent = float(-slope)
    return table
