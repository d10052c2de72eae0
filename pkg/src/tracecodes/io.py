"""Code files, result records and the append-only catalog.

Code file layout::

    q n k
    <k lines of n integer symbols>
    # {"json": "metadata"}

Symbols are polynomial-basis integers ``sum c_i p^i`` (for a prime field the
symbol is the residue itself).  The metadata line is optional.  A non-Conway
field is recorded through a ``"modulus"`` metadata entry.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .errors import MalformedFile
from .gf import FieldSpec, field_create, is_prime
from .matgf import GFMatrix


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            m, x = 0, q
            while x % p == 0:
                x //= p
                m += 1
            return (p, m) if x == 1 else None
    return None


def format_code(G: GFMatrix, metadata: dict | None = None) -> str:
    meta = dict(metadata or {})
    f = G.field
    if f.modulus != field_create(f.p, f.m).modulus:
        meta.setdefault("modulus", list(f.modulus))
    lines = [f"{f.order} {G.cols} {G.rows}"]
    lines += [" ".join(str(int(x)) for x in row) for row in G.data]
    if meta:
        lines.append("# " + json.dumps(meta, sort_keys=True))
    return "\n".join(lines) + "\n"


def serialize_code(G: GFMatrix, path: str | os.PathLike, metadata: dict | None = None) -> None:
    Path(path).write_text(format_code(G, metadata))


def _int(tok: str, line: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedFile(f"{what} {tok!r} is not an integer", line, col) from None


def parse_text(text: str) -> tuple[GFMatrix, dict]:
    lines = text.splitlines()
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    meta: dict = {}
    for i, ln in enumerate(lines):
        if ln.lstrip().startswith("#"):
            try:
                meta.update(json.loads(ln.lstrip()[1:]))
            except json.JSONDecodeError as exc:
                raise MalformedFile(f"metadata is not JSON: {exc.msg}", i + 1, exc.colno + 1) from None
    if not body:
        raise MalformedFile("missing header line `q n k`", 1, 1)
    hline, header = body[0]
    toks = header.split()
    if len(toks) != 3:
        raise MalformedFile("header must be `q n k`", hline, 1)
    q, n, k = (_int(t, hline, j + 1, "header field") for j, t in enumerate(toks))
    pm = _prime_power(q)
    if pm is None:
        raise MalformedFile(f"field size {q} is not a prime power", hline, 1)
    rows = body[1:]
    if len(rows) != k:
        raise MalformedFile(f"header declares {k} rows, found {len(rows)}", hline, 3)
    data = np.zeros((k, n), dtype=np.int64)
    for r, (ln, text_row) in enumerate(rows):
        toks = text_row.split()
        if len(toks) != n:
            raise MalformedFile(f"header declares {n} columns, row has {len(toks)}", ln, min(len(toks), n) + 1)
        for c, tok in enumerate(toks):
            v = _int(tok, ln, c + 1, "symbol")
            if not 0 <= v < q:
                raise MalformedFile(f"symbol {v} outside GF({q})", ln, c + 1)
            data[r, c] = v
    modulus = meta.get("modulus")
    F: FieldSpec = field_create(pm[0], pm[1], tuple(modulus) if modulus else None)
    return GFMatrix(F, data), meta


def parse_code(path: str | os.PathLike) -> tuple[GFMatrix, dict]:
    return parse_text(Path(path).read_text())


# ---------------------------------------------------------------------------
# records and catalog


@dataclass(frozen=True)
class CodeRecord:
    family: str  # "classical" or "stabilizer"
    p: int
    s: int
    r: int
    t: int | None
    points_kind: str | None
    n: int
    k: int
    d_designed: int
    d_lb: int | None = None
    d_ub: int | None = None
    derivations: tuple[str, ...] = ()
    provenance: str = ""
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))
    engine_version: str = __version__

    def __post_init__(self):
        if self.family not in ("classical", "stabilizer"):
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "derivations", tuple(self.derivations))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> CodeRecord:
        return cls(**json.loads(text))


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


class Catalog:
    """Append-only JSON-lines file; every line is ``<sha256> <record json>``."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def append(self, record: CodeRecord) -> None:
        payload = record.to_json()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(f"{_digest(payload)} {payload}\n")

    def _lines(self):
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for i, ln in enumerate(fh, 1):
                ln = ln.rstrip("\n")
                if ln:
                    yield i, ln

    def verify(self) -> list[int]:
        """Line numbers whose checksum does not match their payload."""
        bad = []
        for i, ln in self._lines():
            digest, _, payload = ln.partition(" ")
            if _digest(payload) != digest:
                bad.append(i)
        return bad

    def records(self) -> list[CodeRecord]:
        out = []
        for i, ln in self._lines():
            digest, _, payload = ln.partition(" ")
            if _digest(payload) != digest:
                raise MalformedFile("catalog checksum mismatch", i, 1)
            out.append(CodeRecord.from_json(payload))
        return out
