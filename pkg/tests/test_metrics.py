import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asdegree import BoundedPowerLaw, DomainError
from asdegree.metrics import (
    XPP_MIN_RATIO,
    degrees_at_top_fraction,
    newman_mean_degree,
    newman_rich_fraction,
    param_range,
    ratio_max_degree,
    ratio_min_degree,
    rich_curve,
    rich_fractions,
    sweep,
    xpp_min_ratio_reference,
)


def frac_oracle(lam, k_min, k_max, target):
    """Walk degree classes from the top, including the boundary class in part."""
    ks = range(k_max, k_min - 1, -1)
    z = math.fsum(k ** -lam for k in ks)
    z1 = math.fsum(k ** (1 - lam) for k in ks)
    rn = rd = 0.0
    for k in ks:
        p, q = k ** -lam / z, k ** (1 - lam) / z1
        if rn + p >= target:
            return rd + (target - rn) / p * q
        rn += p
        rd += q
    return 1.0


@pytest.mark.parametrize(
    "lam, expected", [(2.0, 0.608), (2.25, 0.685), (2.5, 0.745), (2.75, 0.794), (3.0, 0.832)]
)
def test_ratio_min_published(lam, expected):
    assert ratio_min_degree(BoundedPowerLaw(lam, 1, 1500)) == pytest.approx(expected, abs=0.005)


@pytest.mark.parametrize("lam, expected", [(2.0, 2.7e-7), (2.5, 8.6e-9)])
def test_ratio_max_published(lam, expected):
    assert ratio_max_degree(BoundedPowerLaw(lam, 1, 1500)) == pytest.approx(expected, rel=0.10)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.2, 3.5), st.integers(1, 50), st.integers(0, 3000))
def test_ratios_are_pmf_at_bounds(lam, k_min, width):
    d = BoundedPowerLaw(lam, k_min, k_min + width)
    assert ratio_min_degree(d) == d.pmf(d.k_min)
    assert ratio_max_degree(d) == d.pmf(d.k_max)


def test_degenerate_ratios():
    d = BoundedPowerLaw(2.4, 7, 7)
    assert ratio_min_degree(d) == pytest.approx(1.0)
    assert ratio_max_degree(d) == pytest.approx(1.0)
    assert rich_curve(d) == [rich_fractions(d, 7)]
    assert rich_fractions(d, 7).r_nodes == 1.0 and rich_fractions(d, 7).r_degrees == 1.0


def test_rich_fractions_values(as_like):
    p3 = rich_fractions(as_like, 3)
    # mpmath oracle, frozen
    assert p3.r_nodes == pytest.approx(0.17115102689695237, rel=1e-10)
    assert p3.r_degrees == pytest.approx(0.64061328072479335, rel=1e-10)
    p2 = rich_fractions(as_like, 2)
    assert p2.r_nodes == pytest.approx(0.31512769371281239, rel=1e-10)
    assert p2.r_degrees == pytest.approx(0.74699062074524067, rel=1e-10)
    assert (rich_fractions(as_like, 1).r_nodes, rich_fractions(as_like, 1).r_degrees) == (1.0, 1.0)
    with pytest.raises(DomainError):
        rich_fractions(as_like, 0)


def test_rich_curve_shape(as_like):
    pts = rich_curve(as_like)
    assert len(pts) == 1500
    assert pts[0].threshold_k == 1500 and pts[-1].threshold_k == 1
    assert (pts[-1].r_nodes, pts[-1].r_degrees) == (1.0, 1.0)
    rn = np.array([p.r_nodes for p in pts])
    assert np.all(np.diff(rn) > 0)
    by_k = {p.threshold_k: p for p in pts}
    assert by_k[3] == rich_fractions(as_like, 3)
    assert by_k[2] == rich_fractions(as_like, 2)


@settings(max_examples=30, deadline=None)
@given(st.floats(1.5, 3.5), st.integers(1, 30), st.integers(1, 2000))
def test_degree_share_dominates_node_share(lam, k_min, width):
    d = BoundedPowerLaw(lam, k_min, k_min + width)
    for p in rich_curve(d)[:-1]:
        assert p.r_degrees >= p.r_nodes
        assert 0 <= p.r_nodes <= 1 and 0 <= p.r_degrees <= 1


@pytest.mark.parametrize(
    "k_max, target", [(1500, 0.27), (2031, 0.27), (1500, 0.17), (1500, 0.2), (50, 0.5), (1500, 1e-9)]
)
def test_degrees_at_top_fraction_oracle(k_max, target):
    d = BoundedPowerLaw(2.25, 1, k_max)
    assert degrees_at_top_fraction(d, target) == pytest.approx(frac_oracle(2.25, 1, k_max, target), rel=1e-9)


def test_degrees_at_top_fraction_anchors(as_like):
    assert degrees_at_top_fraction(as_like, 0.27) == pytest.approx(0.712, abs=0.003)
    assert degrees_at_top_fraction(BoundedPowerLaw(2.25, 1, 2031), 0.27) == pytest.approx(0.717, abs=0.013)
    assert degrees_at_top_fraction(as_like, 1.0) == 1.0
    # landing exactly on a class boundary returns that point
    p = rich_fractions(as_like, 3)
    assert degrees_at_top_fraction(as_like, p.r_nodes) == pytest.approx(p.r_degrees, rel=1e-12)
    for bad in (0.0, -0.1, 1.01):
        with pytest.raises(DomainError):
            degrees_at_top_fraction(as_like, bad)


def test_degrees_at_top_fraction_monotone(as_like):
    ts = np.linspace(0.001, 1.0, 500)
    vals = [degrees_at_top_fraction(as_like, t) for t in ts]
    assert np.all(np.diff(vals) >= 0)


def test_newman_mean_degree():
    assert newman_mean_degree(2.25, 1) == pytest.approx(5.0)
    assert newman_mean_degree(3.0, 1) == pytest.approx(2.0)
    assert newman_mean_degree(2.24, 1) == pytest.approx(1.24 / 0.24)
    assert newman_mean_degree(2.5, 3) == pytest.approx(9.0)
    for lam in (2.0, 1.5):
        with pytest.raises(DomainError):
            newman_mean_degree(lam, 1)


def test_newman_exceeds_bounded_mean():
    for k_max in (10, 100, 1500, 10_000, 100_000):
        assert newman_mean_degree(2.25, 1) > BoundedPowerLaw(2.25, 1, k_max).mean_degree()


def test_newman_rich_fraction():
    assert newman_rich_fraction(2.25, 0.20) == pytest.approx(0.725, abs=0.005)
    assert newman_rich_fraction(2.25, 0.27) == pytest.approx(0.770, abs=0.005)
    assert newman_rich_fraction(2.7, 1.0) == 1.0
    with pytest.raises(DomainError):
        newman_rich_fraction(2.0, 0.2)
    with pytest.raises(DomainError):
        newman_rich_fraction(2.5, 0.0)


def test_xpp_constant():
    assert xpp_min_ratio_reference() == 0.608 == XPP_MIN_RATIO
    assert xpp_min_ratio_reference(2.1, 3, 99) == 0.608
    assert abs(XPP_MIN_RATIO - 0.666) / 0.666 == pytest.approx(0.087, abs=0.001)


def test_monotone_in_lambda():
    lams = np.linspace(1.5, 3.5, 41)
    r_min = [ratio_min_degree(BoundedPowerLaw(l, 1, 1500)) for l in lams]
    r_max = [ratio_max_degree(BoundedPowerLaw(l, 1, 1500)) for l in lams]
    assert np.all(np.diff(r_min) > 0)
    assert np.all(np.diff(r_max) < 0)


def test_param_range():
    assert param_range(1, 5, 2) == [1, 3, 5]
    assert param_range(2.0, 3.0, 0.25) == [2.0, 2.25, 2.5, 2.75, 3.0]
    with pytest.raises(DomainError):
        param_range(5, 1, 1)
    with pytest.raises(DomainError):
        param_range(1, 5, 0)


def test_sweep_mean_degree_lambda():
    table = sweep("mean_degree", "lambda", [3.0, 2.0, 2.25, 2.5, 2.75], {"k_min": 1, "k_max": 1500})
    assert [r[0] for r in table.rows] == [2.0, 2.25, 2.5, 2.75, 3.0]
    np.testing.assert_allclose(table.metric_values, [4.80, 2.71, 1.91, 1.55, 1.37], atol=0.01)
    assert table.decay_exponent is None


def test_sweep_decay_exponents():
    t = sweep("ratio_min_degree", "k_min", range(1, 51), {"lambda": 2.25, "k_max": 1500}, fit_decay=True)
    assert 0.8 <= t.decay_exponent <= 1.0
    t = sweep("ratio_max_degree", "k_max", range(500, 5001, 100), {"lambda": 2.25, "k_min": 1}, fit_decay=True)
    assert t.decay_exponent == pytest.approx(2.25, abs=0.05)


def test_sweep_default_window():
    t = sweep("ratio_min_degree", "k_min", range(1, 1500, 7), {"lambda": 2.25, "k_max": 1500}, fit_decay=True)
    assert t.fit_window == (1, 50.0)
    assert 0.8 <= t.decay_exponent <= 1.0


def test_sweep_decay_needs_three_rows():
    t = sweep("mean_degree", "k_max", [100, 200], {"lambda": 2.25, "k_min": 1}, fit_decay=True)
    assert t.decay_exponent is None


def test_sweep_increase_rate():
    t = sweep("mean_degree_increase", "k_min", [1, 2, 4], {"lambda": 2.25, "k_max": 1500})
    m = [BoundedPowerLaw(2.25, k, 1500).mean_degree() for k in (1, 2, 4)]
    assert t.rows == [(1, m[1] - m[0]), (2, (m[2] - m[1]) / 2)]


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(metric="mean_degree", varied="lambda", values=[], fixed={"k_min": 1, "k_max": 10}),
        dict(metric="bogus", varied="lambda", values=[2.0], fixed={"k_min": 1, "k_max": 10}),
        dict(metric="mean_degree", varied="bogus", values=[2.0], fixed={}),
        dict(metric="mean_degree", varied="lambda", values=[2.0], fixed={"k_min": 1}),
        dict(metric="mean_degree", varied="k_min", values=[20], fixed={"lambda": 2.0, "k_max": 10}),
    ],
)
def test_sweep_errors(kwargs):
    with pytest.raises(DomainError):
        sweep(**kwargs)
