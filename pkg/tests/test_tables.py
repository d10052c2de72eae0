from __future__ import annotations

import pytest

from tracecodes.tables import PRESETS, RefineConfig, build_table


def test_preset_names():
    assert sorted(PRESETS) == ["t1", "t2", "t3", "t4", "t5", "t6"]
    with pytest.raises(KeyError):
        build_table("t9")


def test_t2_rows():
    rows = build_table("t2")
    got = [(r.n, r.k, r.d_designed) for r in rows]
    assert got[:4] == [(128, 80, 10), (128, 72, 11), (128, 66, 12), (128, 58, 14)]
    assert (127, 80, 9) in got and (127, 56, 13) in got


def test_t3_refined_small_codimension_is_macwilliams_exact():
    rows = build_table("t3", refine=True, cfg=RefineConfig(enum_budget=16**5, trials=10**5))
    first = rows[0]
    assert (first.n, first.k, first.d_lb, first.d_ub) == (64, 58, 3, 3)
    assert "macwilliams" in first.provenance
    for r in rows:
        if r.d_lb is not None and r.d_ub is not None:
            assert r.d_lb <= r.d_ub


def test_t5_shapes():
    rows = build_table("t5")
    assert {r.n for r in rows} == {124, 125, 500}
    assert all(r.family == "stabilizer" for r in rows)
