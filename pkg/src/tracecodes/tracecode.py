"""Evaluation codes at the roots of the trace polynomial.

With r = s*n and q = p^s, the trace polynomial
``tr(X) = X + X^q + ... + X^(q^(2n-1))`` has exactly N = q^(2n-1) roots in
GF(p^(2r)).  Codes are obtained by evaluating monomials X^a at those roots
(``z``), at every field element (``zt``), at the non-roots (``zc``), or at the
nonzero roots (``z_minus_zero``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cosets import CosetFamily, ExponentSet, cyclotomic_cosets
from .errors import EmptyDelta, ExponentOutOfRange, InvalidTower
from .gf import FieldElement, FieldSpec, field_create, trace_array
from .matgf import GFMatrix

POINT_KINDS = ("z", "zt", "zc", "z_minus_zero")


@dataclass(frozen=True)
class TraceSpec:
    p: int
    s: int
    r: int
    big_modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.s < 1 or self.r < 1 or self.r % self.s:
            raise InvalidTower(f"s={self.s} must divide r={self.r}")
        if self.big_modulus is not None:
            object.__setattr__(self, "big_modulus", tuple(self.big_modulus))

    @classmethod
    def from_psn(cls, p: int, s: int, n: int) -> TraceSpec:
        return cls(p, s, s * n)

    @property
    def n(self) -> int:
        return self.r // self.s

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def N(self) -> int:
        return self.q ** (2 * self.n - 1)

    @property
    def NT(self) -> int:
        return self.p ** (2 * self.r)

    @property
    def NC(self) -> int:
        return self.NT - self.N

    @cached_property
    def big_field(self) -> FieldSpec:
        return field_create(self.p, 2 * self.r, self.big_modulus)

    @cached_property
    def sub_field(self) -> FieldSpec:
        return field_create(self.p, 2 * self.s)

    @cached_property
    def cosets(self) -> CosetFamily:
        return cyclotomic_cosets(self.p, self.s, self.r)

    @cached_property
    def trace_values(self) -> np.ndarray:
        """tr(x) for every element code x of the big field (coded in the big field)."""
        F = self.big_field
        return trace_array(F, F.elements(), self.s)

    def label(self) -> str:
        return f"(p={self.p}, s={self.s}, r={self.r})"


@dataclass(frozen=True, eq=False)
class EvalPointSet:
    spec: TraceSpec
    kind: str
    points: np.ndarray

    def __len__(self) -> int:
        return len(self.points)

    @property
    def includes_zero(self) -> bool:
        return bool(len(self.points)) and int(self.points[0]) == 0


@dataclass(frozen=True, eq=False)
class EvaluationCode:
    points: EvalPointSet
    delta: ExponentSet
    G: GFMatrix


def _ordered_elements(spec: TraceSpec) -> np.ndarray:
    F = spec.big_field
    return np.concatenate([[0], F.exp(np.arange(F.order - 1))])


def point_set(spec: TraceSpec, kind: str) -> EvalPointSet:
    """Points in canonical order: 0 first (when present), then ascending discrete log."""
    if kind not in POINT_KINDS:
        raise ValueError(f"unknown point kind {kind!r}; expected one of {POINT_KINDS}")
    elems = _ordered_elements(spec)
    tr = spec.trace_values[elems]
    if kind == "z":
        pts = elems[tr == 0]
    elif kind == "z_minus_zero":
        pts = elems[(tr == 0) & (elems != 0)]
    elif kind == "zc":
        pts = elems[tr != 0]
    else:
        pts = elems
    pts = np.array(pts, dtype=np.int64)
    pts.flags.writeable = False
    return EvalPointSet(spec, kind, pts)


def trace_roots(spec: TraceSpec) -> EvalPointSet:
    return point_set(spec, "z")


def complement_points(spec: TraceSpec) -> EvalPointSet:
    return point_set(spec, "zc")


def monomial_rows(field: FieldSpec, points: np.ndarray, exponents) -> np.ndarray:
    return np.array([field.power(points, int(a)) for a in exponents], dtype=np.int64).reshape(
        len(exponents), len(points)
    )


def evaluate_code(points: EvalPointSet, delta: ExponentSet | list[int]) -> EvaluationCode:
    """Generator matrix with rows ev(X^a), a in delta ascending (0^0 = 1)."""
    if not isinstance(delta, ExponentSet):
        delta = ExponentSet(tuple(sorted(set(delta))))
    if len(delta) == 0:
        raise EmptyDelta("delta must be nonempty")
    top = points.spec.NT - 2
    if min(delta.members) < 0 or max(delta.members) > top:
        raise ExponentOutOfRange(f"exponents must lie in [0, {top}]")
    F = points.spec.big_field
    G = GFMatrix(F, monomial_rows(F, points.points, delta.members))
    return EvaluationCode(points, delta, G)


def trace_poly_exponents(spec: TraceSpec) -> list[int]:
    return [spec.q**i for i in range(2 * spec.n)]


def reduce_mod_trace(spec: TraceSpec, k: int) -> dict[int, int]:
    """Representative of X^k modulo tr(X) of degree < N, as {exponent: coefficient mod p}.

    tr(X) has prime-field coefficients, so the remainder does too.
    """
    if not 0 <= k <= spec.NT - 2:
        raise ExponentOutOfRange(f"k={k} outside [0, {spec.NT - 2}]")
    N, p = spec.N, spec.p
    if k < N:
        return {k: 1}
    lower = trace_poly_exponents(spec)[:-1]  # X^N = -(X + X^q + ... + X^(q^(2n-2)))
    coef = np.zeros(k + 1, dtype=np.int64)
    coef[k] = 1
    for d in range(k, N - 1, -1):
        c = coef[d] % p
        if c:
            coef[d] = 0
            for e in lower:
                coef[d - N + e] -= c
    coef %= p
    return {int(e): int(coef[e]) for e in np.flatnonzero(coef)}


def evaluate_sparse(field: FieldSpec, poly: dict[int, int], points: np.ndarray) -> np.ndarray:
    """Evaluate a polynomial with element-coded coefficients at ``points``."""
    acc = np.zeros(len(points), dtype=np.int64)
    for e, c in poly.items():
        acc = field.add(acc, field.mul(c, field.power(points, e)))
    return acc


def contains_top_monomial(spec: TraceSpec, k: int) -> bool:
    return reduce_mod_trace(spec, k).get(spec.N - 1, 0) != 0


def power_sum(spec: TraceSpec, k: int, points: EvalPointSet | None = None) -> FieldElement:
    """sum of alpha^k over the trace roots, evaluated directly."""
    if k < 0:
        raise ValueError("k must be >= 0")
    F = spec.big_field
    pts = (points or trace_roots(spec)).points
    vals = F.power(pts, k)
    acc = 0
    for v in vals:
        acc = F.s_add(acc, int(v))
    return FieldElement(F, acc)


def newton_power_sums(spec: TraceSpec, upto: int) -> list[int]:
    """Power sums s_0..s_upto of the roots of tr(X) from the Newton identities.

    All values lie in the prime field and are returned as integers mod p
    (index 0 is unused and set to 0).
    """
    p, m = spec.p, spec.N
    tr_exps = trace_poly_exponents(spec)
    coeff = {e: 1 for e in tr_exps}  # a_j of tr(X) = sum_j a_j X^j, a_m = 1
    shifts = [m - e for e in tr_exps[:-1]]  # j with a_{m-j} != 0, j >= 1
    s = [0] * (upto + 1)
    for i in range(1, upto + 1):
        acc = 0
        for j in shifts:
            if j <= i - 1 and (i <= m or j <= m - 1):
                acc += s[i - j]
        if i <= m:
            acc += i * coeff.get(m - i, 0)
        s[i] = (-acc) % p
    return s


def newton_power_sum(spec: TraceSpec, k: int) -> FieldElement:
    if k < 1:
        raise ValueError("k must be >= 1")
    return FieldElement(spec.big_field, newton_power_sums(spec, k)[k])
