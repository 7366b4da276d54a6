"""Parameter grids that regenerate the data behind the model figures.

Each panel is a list of series. A series is either a sweep of one metric
over one parameter or a full rich curve for one parameter set.
"""
from __future__ import annotations

import numpy as np

from .metrics import param_range, rich_curve, sweep
from .powerlaw import BoundedPowerLaw

__all__ = ["PANELS", "FIGURES", "panel_rows", "panel_names"]

LAMBDAS = (2.0, 2.25, 2.5, 2.75, 3.0)


def _log_ints(lo, hi, num=60):
    return sorted({int(v) for v in np.rint(np.geomspace(lo, hi, num))})


def _vs_lambda(metric):
    pairs = [(1, 600), (1, 1500), (1, 2600), (10, 1500), (20, 1500)]
    return [
        (metric, "lambda", param_range(2.0, 3.0, 0.05), {"k_min": a, "k_max": b})
        for a, b in pairs
    ]


def _vs_kmin(metric):
    series = [(metric, "k_min", _log_ints(1, 1500), {"lambda": lam, "k_max": 1500}) for lam in LAMBDAS]
    series += [(metric, "k_min", _log_ints(1, kx), {"lambda": 2.25, "k_max": kx}) for kx in (600, 2600)]
    return series


def _vs_kmax(metric):
    series = [(metric, "k_max", _log_ints(2, 10_000), {"lambda": lam, "k_min": 1}) for lam in LAMBDAS]
    series += [(metric, "k_max", _log_ints(km + 1, 10_000), {"lambda": 2.25, "k_min": km}) for km in (10, 20)]
    return series


PANELS = {}
for _fig, _metric in (("fig1", "mean_degree"), ("fig2", "ratio_min_degree"), ("fig3", "ratio_max_degree")):
    PANELS[_fig + "a"] = _vs_lambda(_metric)
    PANELS[_fig + "b"] = _vs_kmin(_metric)
    PANELS[_fig + "c"] = _vs_kmax(_metric)
PANELS["fig4a"] = [("rich_curve", (lam, 1, 1500)) for lam in LAMBDAS]
PANELS["fig4b"] = [("rich_curve", (2.25, km, 1500)) for km in (1, 5, 10, 20)]
PANELS["fig4c"] = [("rich_curve", (2.25, 1, kx)) for kx in (600, 1500, 2600)]

FIGURES = {f"fig{i}": [f"fig{i}{p}" for p in "abc"] for i in range(1, 5)}


def panel_names(preset: str) -> list[str]:
    if preset in PANELS:
        return [preset]
    if preset in FIGURES:
        return FIGURES[preset]
    raise KeyError(preset)


def panel_rows(panel: str) -> tuple[list[str], list[list]]:
    """Header and rows of one panel's long-format table."""
    series = PANELS[panel]
    if series[0][0] == "rich_curve":
        header = ["lambda", "k_min", "k_max", "threshold_k", "r_nodes", "r_degrees"]
        rows = []
        for _, (lam, km, kx) in series:
            for p in rich_curve(BoundedPowerLaw(lam, km, kx)):
                rows.append([lam, km, kx, p.threshold_k, p.r_nodes, p.r_degrees])
        return header, rows

    header = ["lambda", "k_min", "k_max", "metric", "value"]
    rows = []
    for metric, varied, values, fixed in series:
        table = sweep(metric, varied, values, fixed)
        for x, y in table.rows:
            params = dict(fixed, **{varied: x})
            rows.append([params["lambda"], params["k_min"], params["k_max"], metric, y])
    return header, rows
