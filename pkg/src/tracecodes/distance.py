"""Minimum distance of linear codes over small fields.

Three engines, all measuring Hamming weight over the code's own alphabet:

``exact_distance_enum``   every codeword, in vectorized blocks
``brouwer_zimmermann``    low-weight messages over several information sets
``low_weight_search``     randomized Lee-Brickell information-set sampling

plus MacWilliams-based exact distance of a dual code.  The work unit
everywhere is one codeword evaluation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import BudgetExceeded
from .gf import FieldSpec
from .matgf import GFMatrix, kernel, row_basis, row_space_contains, weight

DEFAULT_BUDGET = 10**8
_BLOCK = 1 << 21  # entries per vectorized block


@dataclass(frozen=True, eq=False)
class DistanceResult:
    """Bounds on the minimum distance.

    For the zero code no nonzero codeword exists; ``lb = ub = length + 1`` is
    used as the sentinel.
    """

    lb: int
    ub: int
    exact: bool
    witness: np.ndarray | None
    work_spent: int
    method: str

    @property
    def d(self) -> int | None:
        return self.lb if self.exact else None


def _all_combinations(field: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """Every F-linear combination of ``rows`` (q^len(rows) x n), zero first."""
    n = rows.shape[1]
    table = np.zeros((1, n), dtype=np.int64)
    coeffs = field.elements()
    for r in rows:
        scaled = field.mul(coeffs[:, None], r[None, :])  # q x n
        table = field.add(table[None, :, :], scaled[:, None, :]).reshape(-1, n)
    return table


def _adder(field: FieldSpec):
    if field.p == 2:
        return np.bitwise_xor
    return field.add


def _compact(field: FieldSpec, a: np.ndarray) -> np.ndarray:
    if field.p == 2 and field.order <= 256:
        return a.astype(np.uint8)
    if field.p == 2 and field.order <= 65536:
        return a.astype(np.uint16)
    return a


def _projective_blocks(field: FieldSpec, B: np.ndarray):
    """Blocks covering each nonzero codeword up to scalars exactly once.

    A message is normalized so that its first nonzero coefficient is 1.
    """
    k, n = B.shape
    add = _adder(field)
    q = field.order
    k1 = 0
    while k1 < k - 1 and q ** (k1 + 1) * n <= _BLOCK:
        k1 += 1
    tables: dict[int, np.ndarray] = {}
    for lead in range(k):
        rest = B[lead + 1 :]
        width = min(k1, len(rest))
        if width not in tables:
            tables[width] = _compact(field, _all_combinations(field, B[k - width :]) if width else np.zeros((1, n), dtype=np.int64))
        A = tables[width]
        mid = rest[: len(rest) - width]
        base = B[lead]
        for coeffs in itertools.product(range(q), repeat=len(mid)):
            b = base
            for c, row in zip(coeffs, mid):
                if c:
                    b = field.add(b, field.mul(c, row))
            yield add(A, _compact(field, np.asarray(b))[None, :])


def _enumerate(G: GFMatrix, budget: int, want_distribution: bool):
    f = G.field
    B = row_basis(G)
    k, n = B.shape
    total = f.order**k
    if total > budget:
        raise BudgetExceeded(f"{f.order}^{k} codewords exceed the budget {budget}")
    dist = np.zeros(n + 1, dtype=np.int64)
    dist[0] = 1
    best_w, witness = n + 1, None
    for block in _projective_blocks(f, B.data):
        w = np.count_nonzero(block, axis=1)
        i = int(np.argmin(w))
        if w[i] < best_w:
            best_w, witness = int(w[i]), block[i].astype(np.int64)
        if want_distribution:
            dist[1:] += (f.order - 1) * np.bincount(w, minlength=n + 1)[1 : n + 1]
    return best_w, witness, total, dist


def exact_distance_enum(G: GFMatrix, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Enumerate all q^k codewords (refuses when q^k exceeds ``budget``)."""
    best, witness, work, _ = _enumerate(G, budget, False)
    return DistanceResult(best, best, True, witness, work, "enum")


def weight_distribution(G: GFMatrix, budget: int = DEFAULT_BUDGET) -> list[int]:
    return [int(x) for x in _enumerate(G, budget, True)[3]]


def macwilliams(A: list[int], n: int, q: int) -> list[int]:
    """Weight distribution of the dual code from that of the code (exact integers)."""
    size = sum(A)
    out = []
    for w in range(n + 1):
        tot = 0
        for i, a in enumerate(A):
            if a:
                kraw = sum(
                    (-1) ** j * (q - 1) ** (w - j) * comb(i, j) * comb(n - i, w - j) for j in range(w + 1)
                )
                tot += a * kraw
        if tot % size:
            raise ArithmeticError("MacWilliams transform is not integral")
        out.append(tot // size)
    return out


def dual_distance_macwilliams(G: GFMatrix, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum distance of the Euclidean dual of rowspace(G)."""
    n = G.cols
    B = macwilliams(weight_distribution(G, budget), n, G.field.order)
    for w in range(1, n + 1):
        if B[w]:
            return w
    return n + 1


# ---------------------------------------------------------------------------
# information sets


def _systematic(B: GFMatrix, order) -> tuple[np.ndarray, list[int]]:
    from .matgf import rref

    R, piv = rref(B, col_order=order)
    return R.data[: len(piv)], piv


def _projective_coeffs(field: FieldSpec, w: int) -> np.ndarray:
    nz = np.arange(1, field.order)
    if w == 1:
        return np.ones((1, 1), dtype=np.int64)
    rest = np.array(list(itertools.product(nz, repeat=w - 1)), dtype=np.int64)
    return np.hstack([np.ones((len(rest), 1), dtype=np.int64), rest])


def _combos_min(field: FieldSpec, R: np.ndarray, w: int, budget_left: int):
    """Min-weight codeword among all weight-w messages (first coefficient 1)."""
    k, n = R.shape
    coeffs = _projective_coeffs(field, w)
    best, witness, work = n + 1, None, 0
    per_combo = len(coeffs)
    chunk = max(1, _BLOCK // max(1, per_combo * n))
    it = itertools.combinations(range(k), w)
    while True:
        idx = np.array(list(itertools.islice(it, chunk)), dtype=np.int64)
        if idx.size == 0:
            break
        idx = idx.reshape(-1, w)
        if work + len(idx) * per_combo > budget_left:
            return best, witness, work, False
        acc = np.zeros((len(idx), per_combo, n), dtype=np.int64)
        for i in range(w):
            acc = field.add(acc, field.mul(coeffs[None, :, i, None], R[idx[:, i]][:, None, :]))
        wt = np.count_nonzero(acc, axis=2)
        a, b = np.unravel_index(int(np.argmin(wt)), wt.shape)
        if wt[a, b] < best:
            best, witness = int(wt[a, b]), acc[a, b].copy()
        work += len(idx) * per_combo
    return best, witness, work, True


def brouwer_zimmermann(G: GFMatrix, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    f = G.field
    B = row_basis(G)
    k, n = B.shape
    if k == 0:
        return DistanceResult(n + 1, n + 1, True, None, 0, "bz")
    used: set[int] = set()
    mats: list[tuple[np.ndarray, int]] = []
    while len(used) < n:
        order = [c for c in range(n) if c not in used] + sorted(used)
        R, piv = _systematic(B, order)
        new = [c for c in piv if c not in used]
        if not new:
            break
        mats.append((R, len(new)))
        used.update(piv)
    lb, ub, witness, work = 1, n + 1, None, 0
    for w in range(1, k + 1):
        for R, _ in mats:
            best, wit, spent, done = _combos_min(f, R, w, budget - work)
            work += spent
            if best < ub:
                ub, witness = best, wit
            if not done:
                return DistanceResult(min(lb, ub), ub, False, witness, work, "bz")
        lb = max(lb, sum(max(0, w + 1 - (k - kj)) for _, kj in mats))
        if lb >= ub:
            return DistanceResult(ub, ub, True, witness, work, "bz")
    return DistanceResult(ub, ub, True, witness, work, "bz")


def _systematic_block(B: GFMatrix, H: GFMatrix, perm, use_dual: bool):
    """(info positions, redundancy positions, A) with codewords e_i + A[i] on the redundancy."""
    f = B.field
    n = B.cols
    if not use_dual:
        R, piv = _systematic(B, perm)
        red = [c for c in range(n) if c not in set(piv)]
        return piv, red, R[:, red]
    RH, pivH = _systematic(H, perm)
    info = [c for c in range(n) if c not in set(pivH)]
    A = f.neg(RH[:, info]).T if len(pivH) else np.zeros((len(info), 0), dtype=np.int64)
    return info, list(pivH), A


def low_weight_search(
    G: GFMatrix, target_w: int, trials: int = 10**6, seed: int = 0, max_info_weight: int = 2
) -> np.ndarray | None:
    """Codeword of weight <= target_w from random information sets, or None.

    ``trials`` caps the number of candidate codewords evaluated.  The
    generator is numpy's PCG64 seeded with ``seed``; equal seeds give equal
    outcomes.
    """
    witness, _ = _lee_brickell(G, target_w, trials, seed, max_info_weight)
    return witness


def _lee_brickell(G: GFMatrix, target_w: int, trials: int, seed: int, max_info_weight: int):
    if target_w < 1:
        raise ValueError("target weight must be >= 1")
    f = G.field
    B = row_basis(G)
    k, n = B.shape
    if k == 0:
        return None, 0
    use_dual = k > n - k
    H = kernel(B) if use_dual else None
    rng = np.random.default_rng(seed)
    nz = np.arange(1, f.order)
    work = 0
    while work < trials:
        perm = rng.permutation(n)
        info, red, A = _systematic_block(B, H, perm, use_dual)
        wt1 = 1 + np.count_nonzero(A, axis=1)
        work += k
        hit = np.flatnonzero(wt1 <= target_w)
        if hit.size:
            c = np.zeros(n, dtype=np.int64)
            c[info[hit[0]]] = 1
            c[red] = A[hit[0]]
            return _verified(B, c, target_w), work
        if max_info_weight < 2 or k < 2:
            continue
        for i in range(k - 1):
            if work >= trials:
                break
            # rows i + c * j for all j > i and every nonzero c
            S = f.add(A[i][None, None, :], f.mul(nz[:, None, None], A[i + 1 :][None, :, :]))
            wt = 2 + np.count_nonzero(S, axis=2)
            work += S.shape[0] * S.shape[1]
            ci, j = np.unravel_index(int(np.argmin(wt)), wt.shape)
            if wt[ci, j] <= target_w:
                c = np.zeros(n, dtype=np.int64)
                c[info[i]] = 1
                c[info[i + 1 + j]] = nz[ci]
                c[red] = S[ci, j]
                return _verified(B, c, target_w), work
    return None, work


def _verified(B: GFMatrix, c: np.ndarray, target_w: int) -> np.ndarray:
    if not row_space_contains(B, c) or not 0 < weight(c) <= target_w:  # pragma: no cover
        raise RuntimeError("low-weight search produced an invalid witness")
    return c


def search_distance(G: GFMatrix, lower: int, trials: int = 10**6, seed: int = 0) -> DistanceResult:
    """Combine a known lower bound with a randomized upper bound.

    Exact when a witness of weight ``lower`` turns up.
    """
    n = G.cols
    best, witness, spent = n + 1, None, 0
    target = n
    while True:
        wit, work = _lee_brickell(G, target, trials - spent, seed + spent, 2)
        spent += work
        if wit is None:
            break
        best, witness = weight(wit), wit
        if best <= lower:
            break
        target = best - 1
        if spent >= trials:
            break
    lb = min(lower, best)
    return DistanceResult(lb, best, lb == best, witness, spent, "lws")
