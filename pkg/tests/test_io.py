from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tracecodes.cosets import delta_sigma
from tracecodes.errors import MalformedFile
from tracecodes.gf import field_create
from tracecodes.io import Catalog, CodeRecord, format_code, parse_code, parse_text, serialize_code
from tracecodes.matgf import random_matrix, rank
from tracecodes.subfield import subfield_subcode
from tracecodes.tracecode import TraceSpec, point_set


@given(st.sampled_from([(2, 2), (3, 1), (3, 2), (2, 8), (7, 1)]), st.integers(0, 5), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_round_trip(pm, k, n, seed):
    F = field_create(*pm)
    G = random_matrix(F, k, n, np.random.default_rng(seed))
    G2, meta = parse_text(format_code(G, {"note": "x"}))
    assert G2 == G and meta == {"note": "x"}


def test_non_conway_field_round_trips(tmp_path):
    F = field_create(2, 8, (1, 1, 0, 1, 1, 0, 0, 0, 1))
    G = random_matrix(F, 3, 5, np.random.default_rng(0))
    serialize_code(G, tmp_path / "c.txt")
    G2, _ = parse_code(tmp_path / "c.txt")
    assert G2.field == F and G2 == G


def test_golden_code_file_rank(tmp_path):
    spec = TraceSpec(2, 1, 4)
    code = subfield_subcode(spec, delta_sigma(spec.cosets, 6), point_set(spec, "z"))
    serialize_code(code.basis_matrix, tmp_path / "e.txt", {"t": 6})
    G, meta = parse_code(tmp_path / "e.txt")
    assert rank(G) == 24 and meta["t"] == 6


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("4 3 2\n1 2 3\n", 1, 3),
        ("4 3 1\n1 2\n", 2, 3),
        ("4 3 1\n1 x 3\n", 2, 2),
        ("4 3 1\n1 2 9\n", 2, 3),
        ("6 1 1\n1\n", 1, 1),
        ("", 1, 1),
    ],
)
def test_malformed(text, line, col):
    with pytest.raises(MalformedFile) as exc:
        parse_text(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_record_json_round_trip():
    rec = CodeRecord("stabilizer", 2, 1, 4, 6, "z", 128, 80, 10, 10, 10, ("subcode(1)",), "prov")
    assert CodeRecord.from_json(rec.to_json()) == rec
    with pytest.raises(ValueError):
        CodeRecord("other", 2, 1, 4, 6, "z", 1, 1, 1)


def test_catalog_append_only_and_checksums(tmp_path):
    cat = Catalog(tmp_path / "cat.jsonl")
    r1 = CodeRecord("classical", 2, 1, 4, None, "z", 128, 85, 16)
    r2 = CodeRecord("stabilizer", 2, 1, 4, 6, "z", 128, 80, 10)
    cat.append(r1)
    first = (tmp_path / "cat.jsonl").read_text()
    cat.append(r2)
    text = (tmp_path / "cat.jsonl").read_text()
    assert text.startswith(first)
    assert cat.records() == [r1, r2] and cat.verify() == []
    (tmp_path / "cat.jsonl").write_text(text.replace('"k": 80', '"k": 81'))
    assert cat.verify() == [2]
    with pytest.raises(MalformedFile):
        cat.records()
