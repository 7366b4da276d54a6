"""Maximum-likelihood fitting of a bounded power law to observed degrees.

The exponent is estimated by solving the score equation of the discrete
likelihood on a fixed bracket; cutoffs are either given or chosen by a
Kolmogorov-Smirnov scan.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NoBracketError, NoValidPairError, UnidentifiableError
from .ingest import DegreeSequence
from .powerlaw import BoundedPowerLaw, truncated_zeta

__all__ = [
    "FitConfig",
    "FitResult",
    "log_likelihood",
    "mle_lambda",
    "ks_statistic",
    "select_cutoffs",
    "fit",
]

LAMBDA_BRACKET = (1.05, 6.0)
MIN_TAIL = 10


@dataclass(frozen=True)
class FitConfig:
    """Fitting options.

    With ``strategy="fixed"`` the cutoffs are ``k_min``/``k_max``, falling
    back to the observed extremes when left as ``None``. ``strategy="scan"``
    tries the ``scan_low`` smallest and ``scan_high`` largest distinct
    observed degrees as candidate cutoffs.
    """

    strategy: str = "fixed"
    k_min: int | None = None
    k_max: int | None = None
    bracket: tuple[float, float] = LAMBDA_BRACKET
    xtol: float = 1e-12
    min_tail: int = MIN_TAIL
    scan_low: int = 10
    scan_high: int = 20


@dataclass(frozen=True)
class FitResult:
    lambda_hat: float
    k_min: int
    k_max: int
    n_tail: int
    log_likelihood: float
    ks_stat: float

    def distribution(self) -> BoundedPowerLaw:
        return BoundedPowerLaw(self.lambda_hat, self.k_min, self.k_max)

    def to_dict(self):
        return asdict(self)


def _degrees(degrees) -> np.ndarray:
    if isinstance(degrees, DegreeSequence):
        return degrees.degrees
    return np.asarray(degrees, dtype=np.int64).ravel()


def _tail(degrees, k_min, k_max):
    x = _degrees(degrees)
    return x[(x >= k_min) & (x <= k_max)]


class _Profile:
    """Sufficient statistics of an in-range sample for likelihood evaluation."""

    def __init__(self, x, k_min, k_max):
        self.n = len(x)
        self.sum_log = math.fsum(np.log(x.astype(np.float64)))
        self.log_k = np.log(np.arange(k_min, k_max + 1, dtype=np.float64))
        self.k_min = k_min
        self.k_max = k_max

    def score(self, lam):
        # d/dlam of the log-likelihood: -sum(ln k_i) + n * E_model[ln k]
        w = np.exp(-lam * self.log_k)
        return -self.sum_log + self.n * float(np.dot(self.log_k, w) / w.sum())

    def value(self, lam):
        return -lam * self.sum_log - self.n * math.log(truncated_zeta(lam, self.k_min, self.k_max))


def log_likelihood(degrees, lam: float, k_min: int, k_max: int) -> float:
    """Log-likelihood of ``degrees`` under the bounded power law on [k_min, k_max]."""
    x = _degrees(degrees)
    if x.size and (x.min() < k_min or x.max() > k_max):
        raise DomainError(f"degrees must lie in [{k_min}, {k_max}]")
    if not lam > 0:
        raise DomainError(f"exponent must be positive, got {lam}")
    BoundedPowerLaw(lam, k_min, k_max)  # validates the cutoffs
    return _Profile(x, k_min, k_max).value(lam)


def mle_lambda(degrees, k_min: int, k_max: int, bracket=LAMBDA_BRACKET, xtol: float = 1e-12) -> float:
    """Exponent maximizing the likelihood of the degrees inside [k_min, k_max].

    Degrees outside the cutoffs are ignored. The likelihood is concave in
    the exponent, so its maximum is the unique root of the score inside
    ``bracket``.
    """
    x = _tail(degrees, k_min, k_max)
    if len(x) < 2:
        raise UnidentifiableError(f"need at least two degrees in [{k_min}, {k_max}], got {len(x)}")
    if x.min() == x.max():
        raise UnidentifiableError("all in-range degrees are equal")
    prof = _Profile(x, k_min, k_max)
    lo, hi = bracket
    s_lo, s_hi = prof.score(lo), prof.score(hi)
    if s_lo <= 0:
        raise NoBracketError(f"likelihood maximum lies at or below {lo}")
    if s_hi >= 0:
        raise NoBracketError(f"likelihood maximum lies at or above {hi}")
    return float(brentq(prof.score, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=200))


def ks_statistic(degrees, d: BoundedPowerLaw) -> float:
    """Largest gap between the empirical and model CDFs over the support of ``d``.

    Only degrees inside the support enter the empirical CDF.
    """
    x = _tail(degrees, d.k_min, d.k_max)
    if len(x) == 0:
        raise DomainError("no degrees inside the model support")
    counts = np.bincount(x - d.k_min, minlength=d.k_max - d.k_min + 1)
    emp = np.cumsum(counts) / len(x)
    return float(np.max(np.abs(emp - d.cdf_array)))


def _fit_pair(x, k_min, k_max, config):
    tail = x[(x >= k_min) & (x <= k_max)]
    lam = mle_lambda(tail, k_min, k_max, config.bracket, config.xtol)
    d = BoundedPowerLaw(lam, k_min, k_max)
    return lam, d, tail


def select_cutoffs(degrees, strategy="fixed", k_min=None, k_max=None, config: FitConfig | None = None):
    """Choose the cutoffs ``(k_min, k_max)`` for fitting.

    ``"fixed"`` validates and returns the given pair (observed extremes by
    default). ``"scan"`` refits the exponent for every candidate pair and
    keeps the one with the smallest KS statistic; ties go to the larger
    tail, then the smaller ``k_min``.
    """
    config = config or FitConfig(strategy=strategy, k_min=k_min, k_max=k_max)
    x = _degrees(degrees)
    if x.size == 0:
        raise NoValidPairError("empty degree sequence")

    if strategy == "fixed":
        lo = int(x.min()) if k_min is None else int(k_min)
        hi = int(x.max()) if k_max is None else int(k_max)
        if lo < 1 or hi < lo:
            raise NoValidPairError(f"invalid cutoffs ({lo}, {hi})")
        n_tail = int(np.count_nonzero((x >= lo) & (x <= hi)))
        if n_tail < 2:
            raise NoValidPairError(f"cutoffs ({lo}, {hi}) leave {n_tail} degrees")
        return lo, hi

    if strategy != "scan":
        raise ValueError(f"unknown cutoff strategy {strategy!r}")

    distinct = np.unique(x)
    lows = distinct[: config.scan_low]
    highs = distinct[-config.scan_high:]
    best = None
    for lo in lows:
        for hi in highs:
            if hi <= lo:
                continue
            n_tail = int(np.count_nonzero((x >= lo) & (x <= hi)))
            if n_tail < config.min_tail:
                continue
            try:
                _, d, tail = _fit_pair(x, int(lo), int(hi), config)
            except (UnidentifiableError, NoBracketError):
                continue
            ks = ks_statistic(tail, d)
            key = (ks, -n_tail, int(lo), int(hi))
            if best is None or key < best:
                best = key
    if best is None:
        raise NoValidPairError(f"no cutoff pair leaves {config.min_tail} or more fittable degrees")
    return best[2], best[3]


def fit(degrees, config: FitConfig | None = None) -> FitResult:
    """Select cutoffs, estimate the exponent and score the fit."""
    config = config or FitConfig()
    x = _degrees(degrees)
    k_min, k_max = select_cutoffs(x, config.strategy, config.k_min, config.k_max, config)
    lam, d, tail = _fit_pair(x, k_min, k_max, config)
    prof = _Profile(tail, k_min, k_max)
    return FitResult(
        lambda_hat=lam,
        k_min=k_min,
        k_max=k_max,
        n_tail=len(tail),
        log_likelihood=prof.value(lam),
        ks_stat=ks_statistic(tail, d),
    )
