"""Discrete power law on a bounded integer support.

The distribution is p(k) = k**-lam / Z for k_min <= k <= k_max, where
Z = sum(k**-lam for k in [k_min, k_max]) is an exact finite sum.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError

__all__ = ["BoundedPowerLaw", "make_distribution", "truncated_zeta"]


def _as_degree(value, name):
    try:
        k = operator.index(value)
    except TypeError:
        raise DomainError(f"{name} must be an integer, got {value!r}") from None
    return k


def _powers(s, a, b):
    # descending k, so terms run from smallest to largest for s > 0
    k = np.arange(b, a - 1, -1, dtype=np.float64)
    return k, k ** (-s)


def truncated_zeta(s: float, a: int, b: int) -> float:
    """Return sum(k**-s for k = a..b), inclusive at both ends.

    This is the difference of Hurwitz zeta values zeta(s, a) - zeta(s, b + 1),
    evaluated as a correctly rounded finite sum.
    """
    a = _as_degree(a, "a")
    b = _as_degree(b, "b")
    if a < 1:
        raise DomainError(f"lower bound must be >= 1, got {a}")
    if b < a:
        raise DomainError(f"upper bound {b} is below lower bound {a}")
    s = float(s)
    if not math.isfinite(s):
        raise DomainError(f"exponent must be finite, got {s}")
    _, terms = _powers(s, a, b)
    return math.fsum(terms)


@dataclass(frozen=True)
class BoundedPowerLaw:
    """Power-law degree distribution with a minimum and a maximum degree.

    Parameters
    ----------
    lam : float
        Exponent; any positive value is admitted.
    k_min, k_max : int
        Inclusive support bounds, ``1 <= k_min <= k_max``.

    ``z_norm`` is filled in on construction and is the normalization sum.
    Instances are immutable and safe to share between threads.
    """

    lam: float
    k_min: int
    k_max: int
    z_norm: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lam = float(self.lam)
        k_min = _as_degree(self.k_min, "k_min")
        k_max = _as_degree(self.k_max, "k_max")
        if not (math.isfinite(lam) and lam > 0):
            raise DomainError(f"exponent must be positive, got {self.lam!r}")
        if k_min < 1:
            raise DomainError(f"k_min must be >= 1, got {k_min}")
        if k_max < k_min:
            raise DomainError(f"k_max={k_max} is below k_min={k_min}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "k_min", k_min)
        object.__setattr__(self, "k_max", k_max)
        object.__setattr__(self, "z_norm", truncated_zeta(lam, k_min, k_max))

    # -- cached support arrays (ascending k) --------------------------------

    @cached_property
    def support(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_max + 1, dtype=np.int64)

    @cached_property
    def _tails(self):
        # upper-tail sums of k**-lam and k**(1-lam), accumulated small-to-large
        k, w = _powers(self.lam, self.k_min, self.k_max)
        node_tail = np.cumsum(w)[::-1]
        degree_tail = np.cumsum(w * k)[::-1]
        return node_tail, degree_tail

    @cached_property
    def ccdf_array(self) -> np.ndarray:
        """``ccdf_array[i] = P(K >= k_min + i)``; first entry is exactly 1."""
        node_tail, _ = self._tails
        return node_tail / node_tail[0]

    @cached_property
    def degree_ccdf_array(self) -> np.ndarray:
        """Share of total degree mass held by nodes of degree >= k_min + i."""
        _, degree_tail = self._tails
        return degree_tail / degree_tail[0]

    @cached_property
    def cdf_array(self) -> np.ndarray:
        """``cdf_array[i] = P(K <= k_min + i) = 1 - ccdf(k_min + i + 1)``."""
        c = np.empty(self.k_max - self.k_min + 1)
        c[:-1] = 1.0 - self.ccdf_array[1:]
        c[-1] = 1.0
        return c

    @cached_property
    def pmf_array(self) -> np.ndarray:
        return self.support.astype(np.float64) ** (-self.lam) / self.z_norm

    # -- point queries ------------------------------------------------------

    def _index(self, k):
        k = _as_degree(k, "k")
        if not self.k_min <= k <= self.k_max:
            raise DomainError(f"degree {k} outside support [{self.k_min}, {self.k_max}]")
        return k - self.k_min

    def pmf(self, k: int) -> float:
        """Probability that a node has degree exactly ``k``."""
        k = self._index(k) + self.k_min
        return float(k) ** (-self.lam) / self.z_norm

    def ccdf(self, k: int) -> float:
        """Probability that a node has degree ``>= k`` (inclusive)."""
        return float(self.ccdf_array[self._index(k)])

    def cdf(self, k: int) -> float:
        """Probability that a node has degree ``<= k``."""
        return float(self.cdf_array[self._index(k)])

    def quantile(self, u):
        """Smallest degree whose CDF reaches ``u``; vectorized over arrays.

        ``u`` must lie in ``[0, 1)``.
        """
        arr = np.asarray(u, dtype=np.float64)
        if arr.size and (np.any(~(arr >= 0.0)) or np.any(arr >= 1.0)):
            raise DomainError("quantile level must lie in [0, 1)")
        idx = np.searchsorted(self.cdf_array, arr, side="left")
        out = self.k_min + idx
        if out.ndim == 0:
            return int(out)
        return out.astype(np.int64)

    def mean_degree(self) -> float:
        """Average degree, Z(lam - 1) / Z(lam) over the support."""
        return truncated_zeta(self.lam - 1.0, self.k_min, self.k_max) / self.z_norm


def make_distribution(lam: float, k_min: int, k_max: int) -> BoundedPowerLaw:
    return BoundedPowerLaw(lam, k_min, k_max)
