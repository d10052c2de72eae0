from __future__ import annotations

import numpy as np
import pytest

from tracecodes.cosets import ExponentSet, closure, delta_sigma, max_admissible_t
from tracecodes.errors import DeltaNotCosetClosed
from tracecodes.gf import embedding
from tracecodes.matgf import contains_row_space, rank, same_row_space
from tracecodes.subfield import (
    bch_designed_distance,
    lift_is_subfield_valued,
    subfield_subcode,
    subfield_subcode_delsarte,
    trace_lift_basis,
)
from tracecodes.tracecode import TraceSpec, evaluate_code, point_set


def test_lifts_are_subfield_valued():
    spec = TraceSpec(2, 1, 4)
    basis = trace_lift_basis(spec, delta_sigma(spec.cosets, 6))
    assert len(basis) == 25
    assert all(lift_is_subfield_valued(spec, L) for L in basis.elements)


def test_not_closed_rejected():
    spec = TraceSpec(2, 1, 4)
    with pytest.raises(DeltaNotCosetClosed):
        trace_lift_basis(spec, ExponentSet((0, 1)))


def test_golden_rank_and_dual():
    spec = TraceSpec(2, 1, 4)
    D = delta_sigma(spec.cosets, 6)
    z = subfield_subcode(spec, D, point_set(spec, "z"))
    zt = subfield_subcode(spec, D, point_set(spec, "zt"))
    assert (z.actual_dim, z.dual_dim, z.designed_dual_distance) == (24, 104, 10)
    assert (zt.actual_dim, zt.dual_dim, zt.designed_dual_distance) == (25, 231, 10)


@pytest.mark.parametrize("tower", [(2, 1, 3), (3, 1, 2), (2, 2, 4)])
@pytest.mark.parametrize("kind", ["z", "zc"])
def test_trace_lifts_inside_big_field_code(tower, kind):
    spec = TraceSpec(*tower)
    t = max_admissible_t(spec.cosets, spec.q, spec.n)
    D = delta_sigma(spec.cosets, t)
    pts = point_set(spec, kind)
    sub = subfield_subcode(spec, D, pts)
    big = evaluate_code(pts, D)
    emb = embedding(spec.sub_field, spec.big_field)
    lifted = big.G.__class__(spec.big_field, emb.embed(sub.G_sub.data))
    assert contains_row_space(big.G, lifted)
    assert same_row_space(subfield_subcode_delsarte(big.G, spec.sub_field), sub.G_sub)


def test_beta_choice_does_not_change_code():
    spec = TraceSpec(2, 1, 4)
    D = delta_sigma(spec.cosets, 5)
    pts = point_set(spec, "z")
    a = subfield_subcode(spec, D, pts, beta_choice=1)
    b = subfield_subcode(spec, D, pts, beta_choice=7)
    assert same_row_space(a.G_sub, b.G_sub)


def test_designed_distance_cases():
    M = 255
    assert bch_designed_distance(ExponentSet((0, 1, 2, 4)), M, True, 128) == 4
    assert bch_designed_distance(ExponentSet((1, 2, 4)), M, True, 128) == 1
    assert bch_designed_distance(ExponentSet((1, 2, 4)), M, False, 127) == 3
    assert bch_designed_distance(ExponentSet((0, 254, 1)), M, False, 127) == 4  # cyclic run 254, 0, 1


def test_closure_families_have_consistent_dimensions():
    spec = TraceSpec(3, 1, 2)
    D = closure(spec.cosets, [1, 2, 3])
    code = subfield_subcode(spec, D, point_set(spec, "z"))
    assert code.actual_dim <= code.designed_dim_bound
    assert rank(code.basis_matrix) == code.actual_dim
    assert np.all(code.G_sub.data < spec.sub_field.order)
