from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tracecodes.errors import EmptyDelta, ExponentOutOfRange, InvalidTower
from tracecodes.matgf import rank
from tracecodes.tracecode import (
    TraceSpec,
    contains_top_monomial,
    evaluate_code,
    evaluate_sparse,
    newton_power_sums,
    point_set,
    power_sum,
    reduce_mod_trace,
)

SPECS = [TraceSpec(2, 1, 2), TraceSpec(2, 1, 3), TraceSpec(3, 1, 2), TraceSpec(2, 2, 4), TraceSpec(5, 1, 1)]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
def test_point_counts(spec):
    z, zc, zt = (point_set(spec, k) for k in ("z", "zc", "zt"))
    assert len(z) == spec.N and len(zc) == spec.NC and len(zt) == spec.NT
    assert len(point_set(spec, "z_minus_zero")) == spec.N - 1
    assert z.includes_zero and not zc.includes_zero
    assert set(z.points.tolist()).isdisjoint(zc.points.tolist())


def test_roots_brute_force():
    # independent oracle: evaluate X + X^2 + X^4 + X^8 at every element of GF(16)
    spec = TraceSpec(2, 1, 2)
    F = spec.big_field
    roots = [x for x in range(16) if F.s_add(F.s_add(x, F.s_pow(x, 2)), F.s_add(F.s_pow(x, 4), F.s_pow(x, 8))) == 0]
    assert sorted(point_set(spec, "z").points.tolist()) == roots


def test_invalid_tower():
    with pytest.raises(InvalidTower):
        TraceSpec(2, 3, 4)


def test_evaluate_errors():
    spec = TraceSpec(2, 1, 2)
    pts = point_set(spec, "z")
    with pytest.raises(EmptyDelta):
        evaluate_code(pts, [])
    with pytest.raises(ExponentOutOfRange):
        evaluate_code(pts, [15])


def test_reduction_of_top_power():
    spec = TraceSpec(2, 1, 4)
    assert reduce_mod_trace(spec, 128) == {1: 1, 2: 1, 4: 1, 8: 1, 16: 1, 32: 1, 64: 1}


@pytest.mark.parametrize("spec", SPECS[:3], ids=lambda s: s.label())
def test_reduction_agrees_on_roots(spec):
    F = spec.big_field
    pts = point_set(spec, "z").points
    for k in range(0, spec.NT - 1, 3):
        red = reduce_mod_trace(spec, k)
        assert np.array_equal(evaluate_sparse(F, red, pts), F.power(pts, k))


@given(st.sampled_from(SPECS[:3]), st.data())
def test_power_sum_law(spec, data):
    k = data.draw(st.integers(1, spec.NT - 2))
    direct = power_sum(spec, k).value
    assert direct == newton_power_sums(spec, k)[k]
    assert (direct != 0) == contains_top_monomial(spec, k)


def test_vandermonde_rank_full_below_N():
    spec = TraceSpec(2, 1, 3)
    pts = point_set(spec, "z")
    E = evaluate_code(pts, list(range(spec.N)))
    assert rank(E.G) == spec.N
