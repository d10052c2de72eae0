"""Stabilizer code parameters from Hermitian dual-containing codes.

A classical [n, k] code C over GF(q^2) with C^{perp_h} ⊆ C gives an
[[n, 2k - n, >= d(C)]]_q stabilizer code.  Here C is always the Hermitian
dual of a self-orthogonal code, so the certificate is a zero Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from .cosets import ExponentSet, closure, delta_sigma, trace_bound
from .duality import HermitianContext, hermitian_dual, is_hermitian_self_orthogonal
from .errors import BoundViolated, CertificationFailed, InvalidDerivation, NotDualContaining
from .matgf import GFMatrix, kernel, rank, row_basis
from .subfield import SubfieldCode, subfield_subcode
from .tracecode import EvaluationCode, TraceSpec, evaluate_code, point_set


@dataclass(frozen=True)
class StabilizerParams:
    n: int
    k: int
    q: int
    distance_designed: int
    distance_lb: int | None = None
    distance_ub: int | None = None
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"dimension {self.k} outside [0, {self.n}]")
        if self.distance_lb is not None and self.distance_ub is not None and self.distance_lb > self.distance_ub:
            raise ValueError("distance lower bound exceeds upper bound")

    @property
    def is_mds(self) -> bool:
        return self.k == self.n - 2 * (self.distance_designed - 1)

    @property
    def distance_exact(self) -> int | None:
        if self.distance_lb is not None and self.distance_lb == self.distance_ub:
            return self.distance_lb
        return None

    def __str__(self) -> str:
        d = self.distance_exact
        dtxt = str(d) if d is not None else f">={self.distance_designed}"
        return f"[[{self.n},{self.k},{dtxt}]]_{self.q}"


@dataclass(frozen=True)
class ClassicalParams:
    n: int
    k: int
    q: int  # alphabet size
    distance_designed: int
    distance_lb: int | None = None
    distance_ub: int | None = None
    provenance: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"[{self.n},{self.k},>={self.distance_designed}]_{self.q}"


@dataclass(frozen=True, eq=False)
class ClassicalCode:
    """Parameters plus a materialized generator matrix."""

    params: ClassicalParams
    G: GFMatrix


@dataclass(frozen=True)
class DerivationStep:
    kind: Literal["shorten", "puncture", "subcode"]
    arg: int = 0  # coordinate for shorten/puncture, dimension drop for subcode

    def __str__(self) -> str:
        return f"{self.kind}({self.arg})"


def stabilizer_from_classical(
    k: int, n: int, d: int, q: int, *, dual_contained: bool, provenance: tuple[str, ...] = ()
) -> StabilizerParams:
    """[[n, 2k - n, >= d]]_q from a certified Hermitian dual-containing [n, k, d]_{q^2} code."""
    if not dual_contained:
        raise NotDualContaining(f"[{n},{k}] code is not certified Hermitian dual-containing")
    return StabilizerParams(n, 2 * k - n, q, d, provenance=provenance + (f"k = 2*{k} - {n}",))


# ---------------------------------------------------------------------------
# constructions


@dataclass(frozen=True, eq=False)
class MDSResult:
    params: StabilizerParams
    code: EvaluationCode
    dual: GFMatrix


def mds_stabilizer(spec: TraceSpec, t: int) -> MDSResult:
    bound = trace_bound(spec.q, spec.n)
    if not 0 <= t < bound:
        raise BoundViolated(f"t={t} must satisfy 0 <= t < {bound}")
    E = evaluate_code(point_set(spec, "z"), list(range(t + 1)))
    ctx = HermitianContext(spec.big_field, spec.r)
    ok = is_hermitian_self_orthogonal(E.G, ctx)
    if not ok:
        raise CertificationFailed(f"E_Delta({t}) is not Hermitian self-orthogonal for {spec.label()}")
    dual = hermitian_dual(E.G, ctx)
    params = stabilizer_from_classical(
        dual.rows,
        spec.N,
        t + 2,
        spec.q**spec.n,
        dual_contained=True,
        provenance=(f"mds{spec.label()} t={t}", f"Delta(t)={{0..{t}}} Gram=0 over GF({spec.NT}), e={spec.r}"),
    )
    return MDSResult(params, E, dual)


@dataclass(frozen=True, eq=False)
class TraceStabilizer:
    params: StabilizerParams
    code: SubfieldCode
    t: int
    points_kind: str
    certified: bool

    def dual_generator(self) -> GFMatrix:
        """Generator of the Hermitian dual (the dual-containing classical code)."""
        ctx = HermitianContext(self.code.spec.sub_field, self.code.spec.s)
        return hermitian_dual(self.code.G_sub, ctx)


def stabilizer_delta(spec: TraceSpec, t: int, points_kind: str) -> ExponentSet:
    """Delta^sigma(t); the coset {0} is left out together with the point 0."""
    return delta_sigma(spec.cosets, t, drop_zero=points_kind == "z_minus_zero")


def trace_stabilizer(
    spec: TraceSpec,
    t: int,
    points_kind: str = "z",
    *,
    require_bound: bool = True,
    beta_choice: int = 1,
) -> TraceStabilizer:
    """Subfield-subcode over GF(p^2s), Gram certification, stabilizer parameters.

    With ``require_bound`` the representative a_t must lie below the trace
    bound (where self-orthogonality is guaranteed) and a failed certification
    is an internal error.  Without it, larger t are tried and the result
    reports ``certified=False`` when the Gram matrix is nonzero.
    """
    fam = spec.cosets
    bound = trace_bound(spec.q, spec.n)
    if require_bound and fam.reps[t] >= bound:
        raise BoundViolated(f"a_{t}={fam.reps[t]} is not below the trace bound {bound}")
    if t + 1 > fam.z:
        raise BoundViolated(f"t={t} leaves no coset for the designed distance")
    delta = stabilizer_delta(spec, t, points_kind)
    pts = point_set(spec, points_kind)
    code = subfield_subcode(spec, delta, pts, beta_choice)
    ctx = HermitianContext(spec.sub_field, spec.s)
    # unreduced lifts first, then the row basis
    certified = is_hermitian_self_orthogonal(code.basis_matrix, ctx) and is_hermitian_self_orthogonal(code.G_sub, ctx)
    if not certified and require_bound:
        raise CertificationFailed(f"Gram matrix nonzero for {spec.label()} t={t}")
    prov = (
        f"trace{spec.label()} t={t} points={points_kind}",
        f"|Delta|={len(delta)} dim_bound={code.designed_dim_bound} rank={code.actual_dim}",
        f"hermitian Gram over GF({spec.sub_field.order}) e={spec.s}: {'zero' if certified else 'NONZERO'}",
    )
    n = code.length
    kd = code.dual_dim
    if certified:
        params = stabilizer_from_classical(
            kd, n, code.designed_dual_distance, spec.q, dual_contained=True, provenance=prov
        )
    else:
        params = StabilizerParams(n, max(0, 2 * kd - n), spec.q, code.designed_dual_distance, provenance=prov + ("uncertified",))
    return TraceStabilizer(params, code, t, points_kind, certified)


def trace_stabilizer_family(spec: TraceSpec, points_kind: str, ts, *, require_bound: bool = False):
    """Certified members for each t (uncertified ones are dropped)."""
    out = []
    for t in ts:
        res = trace_stabilizer(spec, t, points_kind, require_bound=require_bound)
        if res.certified:
            out.append(res)
    return out


# ---------------------------------------------------------------------------
# classical codes from the same family


def classical_dual_code(spec: TraceSpec, delta: ExponentSet, points_kind: str) -> ClassicalCode:
    """Euclidean dual of the subfield-subcode, with its designed distance."""
    code = subfield_subcode(spec, delta, point_set(spec, points_kind))
    H = kernel(code.G_sub)
    params = ClassicalParams(
        code.length,
        H.rows,
        spec.sub_field.order,
        code.designed_dual_distance,
        provenance=(f"dual of subfield-subcode {spec.label()} points={points_kind} |Delta|={len(delta)}",),
    )
    return ClassicalCode(params, H)


def search_records(
    spec: TraceSpec,
    designed: int,
    kinds=("z", "zc", "z_minus_zero"),
) -> ClassicalCode:
    """Largest dual dimension with BCH designed distance >= ``designed``.

    Candidates are coset closures of runs [b, b + designed - 2]; with the
    point 0 present only b = 0 gives the bound.
    """
    fam = spec.cosets
    M = fam.modulus
    best = None
    best_key = None
    for order, kind in enumerate(kinds):
        pts = point_set(spec, kind)
        seen = set()
        for b in [0] if pts.includes_zero else range(M):
            delta = closure(fam, [(b + i) % M for i in range(designed - 1)])
            if delta.members in seen:
                continue
            seen.add(delta.members)
            code = subfield_subcode(spec, delta, pts)
            if code.designed_dual_distance < designed:
                continue
            key = (code.dual_dim, -order, -b)
            if best_key is None or key > best_key:
                best_key, best = key, (kind, b, delta, code)
    kind, b, delta, code = best
    H = kernel(code.G_sub)
    params = ClassicalParams(
        code.length,
        H.rows,
        spec.sub_field.order,
        code.designed_dual_distance,
        provenance=(f"search{spec.label()} points={kind} run=[{b},{b + designed - 2}] |Delta|={len(delta)}",),
    )
    return ClassicalCode(params, H)


# ---------------------------------------------------------------------------
# derivations


def _shorten_matrix(G: GFMatrix, coord: int) -> GFMatrix:
    f = G.field
    B = row_basis(G).data.copy()
    col = B[:, coord]
    nz = np.flatnonzero(col)
    if nz.size:
        piv = int(nz[0])
        others = [i for i in range(B.shape[0]) if i != piv]
        prow = f.mul(B[piv], f.s_inv(int(col[piv])))
        B = B[others]
        factors = B[:, coord].copy()
        B = f.sub(B, f.mul(factors[:, None], prow[None, :]))
    return GFMatrix(f, np.delete(B, coord, axis=1))


def derive(params: StabilizerParams, step: DerivationStep) -> StabilizerParams:
    """Parameter arithmetic for stabilizer codes (puncture or subcode)."""
    prov = params.provenance + (str(step),)
    if step.kind == "puncture":
        if not 0 <= step.arg < params.n or params.n < 2:
            raise InvalidDerivation(f"cannot puncture coordinate {step.arg} of length {params.n}")
        d = max(1, params.distance_designed - 1)
        lb = None if params.distance_lb is None else max(1, params.distance_lb - 1)
        return StabilizerParams(params.n - 1, min(params.k, params.n - 1), params.q, d, lb, None, prov)
    if step.kind == "subcode":
        if not 0 <= step.arg <= params.k:
            raise InvalidDerivation(f"cannot drop {step.arg} from dimension {params.k}")
        return replace(params, k=params.k - step.arg, distance_ub=None, provenance=prov)
    raise InvalidDerivation(f"{step.kind} is not a stabilizer derivation")


def derive_classical(code: ClassicalCode, step: DerivationStep) -> ClassicalCode:
    p = code.params
    prov = p.provenance + (str(step),)
    if step.kind == "shorten":
        if not 0 <= step.arg < p.n:
            raise InvalidDerivation(f"coordinate {step.arg} outside length {p.n}")
        G = _shorten_matrix(code.G, step.arg)
        return ClassicalCode(replace(p, n=p.n - 1, k=rank(G), distance_ub=None, provenance=prov), G)
    if step.kind == "puncture":
        if not 0 <= step.arg < p.n:
            raise InvalidDerivation(f"coordinate {step.arg} outside length {p.n}")
        G = GFMatrix(code.G.field, np.delete(code.G.data, step.arg, axis=1))
        d = max(1, p.distance_designed - 1)
        return ClassicalCode(replace(p, n=p.n - 1, k=rank(G), distance_designed=d, distance_lb=None, distance_ub=None, provenance=prov), G)
    if step.kind == "subcode":
        B = row_basis(code.G)
        if not 0 <= step.arg <= B.rows:
            raise InvalidDerivation(f"cannot drop {step.arg} from dimension {B.rows}")
        G = GFMatrix(B.field, B.data[: B.rows - step.arg])
        return ClassicalCode(replace(p, k=G.rows, distance_ub=None, provenance=prov), G)
    raise InvalidDerivation(f"unknown derivation {step.kind}")


def shorten_chain(code: ClassicalCode, times: int) -> list[ClassicalCode]:
    """Shorten repeatedly at the last coordinate; returns every intermediate code."""
    out = []
    cur = code
    for _ in range(times):
        cur = derive_classical(cur, DerivationStep("shorten", cur.params.n - 1))
        out.append(cur)
    return out
