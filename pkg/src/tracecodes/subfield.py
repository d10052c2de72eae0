"""Subfield-subcodes over GF(p^{2s}) of evaluation codes.

Two independent constructions:

* ``subfield_subcode`` evaluates the trace-lift basis
  ``T_a(beta^l X^a) = sum_k (beta^l X^a)^(p^(2sk))`` (k < i_a) for every coset
  representative a in delta, which always evaluates into GF(p^{2s});
* ``subfield_subcode_delsarte`` computes ``C ∩ GF(p^{2s})^m`` as the dual of
  the trace of the dual of C.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cosets import CosetFamily, ExponentSet, is_coset_closed
from .errors import DeltaNotCosetClosed
from .gf import FieldSpec, embedding, trace_array
from .matgf import GFMatrix, kernel, row_basis, vstack
from .tracecode import EvalPointSet, TraceSpec, evaluate_sparse


@dataclass(frozen=True)
class TraceLift:
    rep: int
    l: int
    poly: dict[int, int]  # exponent -> big-field coefficient code


@dataclass(frozen=True, eq=False)
class TraceLiftBasis:
    spec: TraceSpec
    delta: ExponentSet
    elements: tuple[TraceLift, ...]

    def __len__(self) -> int:
        return len(self.elements)


def subfield_beta(spec: TraceSpec, size: int, which: int = 1) -> int:
    """A primitive element of GF(p^{2s*size}) inside the big field.

    ``which`` (coprime to the subfield's multiplicative order) selects among
    the primitive elements; 1 gives the Conway-tower choice.
    """
    F = spec.big_field
    order = spec.p ** (2 * spec.s * size) - 1
    if gcd(which, order) != 1:
        raise ValueError(f"{which} is not coprime to {order}")
    return F.s_pow(F.generator, (F.order - 1) // order * which)


def _check_closed(F: CosetFamily, delta: ExponentSet) -> None:
    if not is_coset_closed(F, delta.members):
        raise DeltaNotCosetClosed("delta is not a union of cyclotomic cosets")


def trace_lift_basis(spec: TraceSpec, delta: ExponentSet, beta_choice: int = 1) -> TraceLiftBasis:
    F = spec.big_field
    fam = spec.cosets
    _check_closed(fam, delta)
    base = fam.base
    reps = sorted({fam.coset_of(x).rep for x in delta.members})
    out = []
    for a in reps:
        size = fam.coset_of(a).size
        if a == 0:
            out.append(TraceLift(0, 0, {0: 1}))
            continue
        beta = subfield_beta(spec, size, beta_choice)
        for l in range(size):
            c = F.s_pow(beta, l)
            poly = {}
            e = a
            for _ in range(size):
                poly[e] = c
                e = e * base % fam.modulus
                c = F.s_pow(c, base)
            out.append(TraceLift(a, l, poly))
    return TraceLiftBasis(spec, delta, tuple(out))


def lift_is_subfield_valued(spec: TraceSpec, lift: TraceLift) -> bool:
    """Coefficient-level check that f^(p^(2s)) = f modulo X^(p^(2r)) - X."""
    F = spec.big_field
    fam = spec.cosets
    image = {}
    for e, c in lift.poly.items():
        e2 = e * fam.base % fam.modulus if e else 0
        image[e2] = F.s_pow(c, fam.base)
    return image == lift.poly


def evaluate_lifts(basis: TraceLiftBasis, points: EvalPointSet) -> GFMatrix:
    """Evaluations of the basis projected into GF(p^{2s}) (one row per lift)."""
    spec = basis.spec
    F, K = spec.big_field, spec.sub_field
    emb = embedding(K, F)
    rows = np.zeros((len(basis), len(points)), dtype=np.int64)
    for i, lift in enumerate(basis.elements):
        vals = evaluate_sparse(F, lift.poly, points.points)
        proj = emb.try_project(vals)
        if np.any(proj < 0):
            raise RuntimeError(f"trace lift of X^{lift.rep} left GF(p^2s); embedding is inconsistent")
        rows[i] = proj
    return GFMatrix(K, rows)


def bch_designed_distance(delta: ExponentSet, modulus: int, includes_zero: bool, length: int) -> int:
    """BCH-style lower bound on the distance of the dual of the evaluation code.

    With the point 0 present the consecutive run must start at exponent 0;
    otherwise any cyclic run of exponents mod p^{2r}-1 counts.
    """
    members = set(delta.members)
    if includes_zero:
        run = 0
        while run in members:
            run += 1
        return min(run, length) + 1
    ring = {x % modulus for x in members}
    if len(ring) >= modulus:
        return length + 1
    best = 0
    for x in ring:
        if (x - 1) % modulus in ring:
            continue
        run = 0
        while (x + run) % modulus in ring:
            run += 1
        best = max(best, run)
    return min(best, length) + 1


@dataclass(frozen=True, eq=False)
class SubfieldCode:
    spec: TraceSpec
    delta: ExponentSet
    points: EvalPointSet
    basis_matrix: GFMatrix  # unreduced trace-lift evaluations
    G_sub: GFMatrix  # row basis
    designed_dim_bound: int
    designed_dual_distance: int

    @property
    def length(self) -> int:
        return len(self.points)

    @property
    def actual_dim(self) -> int:
        return self.G_sub.rows

    @property
    def dual_dim(self) -> int:
        return self.length - self.actual_dim

    def summary(self) -> dict:
        return {
            "length": self.length,
            "designed_dim_bound": self.designed_dim_bound,
            "actual_dim": self.actual_dim,
            "dual_dim": self.dual_dim,
            "designed_dual_distance": self.designed_dual_distance,
        }


def subfield_subcode(spec: TraceSpec, delta: ExponentSet, points: EvalPointSet, beta_choice: int = 1) -> SubfieldCode:
    basis = trace_lift_basis(spec, delta, beta_choice)
    B = evaluate_lifts(basis, points)
    return SubfieldCode(
        spec=spec,
        delta=delta,
        points=points,
        basis_matrix=B,
        G_sub=row_basis(B),
        designed_dim_bound=len(basis),
        designed_dual_distance=bch_designed_distance(
            delta, spec.cosets.modulus, points.includes_zero, len(points)
        ),
    )


def subfield_subcode_delsarte(G: GFMatrix, sub: FieldSpec) -> GFMatrix:
    """Row basis of rowspace(G) ∩ sub^m via (C|sub)^perp = Tr(C^perp)."""
    F = G.field
    emb = embedding(sub, F)
    H = kernel(G)
    degree = F.m // sub.m
    pieces = []
    for i in range(degree):
        theta = F.s_pow(F.generator, i)
        tr = trace_array(F, F.mul(theta, H.data), sub.m)
        proj = emb.try_project(tr)
        if np.any(proj < 0):  # pragma: no cover
            raise RuntimeError("trace left the subfield")
        pieces.append(GFMatrix(sub, proj.reshape(H.rows, G.cols)))
    T = vstack(*pieces) if H.rows else GFMatrix(sub, np.zeros((0, G.cols), dtype=np.int64))
    return row_basis(kernel(T)) if T.rows else GFMatrix(sub, np.eye(G.cols, dtype=np.int64))
