"""Euclidean and Hermitian duals and Gram-matrix self-orthogonality checks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch
from .gf import FieldSpec
from .matgf import GFMatrix, conj_transpose, frobenius_matrix, kernel, matmul


@dataclass(frozen=True)
class HermitianContext:
    """GF(p^(2e)) with conjugation x -> x^(p^e)."""

    field: FieldSpec
    conj_exponent: int

    def __post_init__(self):
        if 2 * self.conj_exponent != self.field.m:
            raise ValueError(f"conjugation exponent {self.conj_exponent} is not half the degree of {self.field}")


def hermitian_gram(G: GFMatrix, ctx: HermitianContext) -> GFMatrix:
    """Entry (i, j) is sum_k G[i,k] * G[j,k]^(p^e)."""
    if G.field != ctx.field:
        raise FieldMismatch(f"{G.field} vs {ctx.field}")
    return matmul(G, conj_transpose(G, ctx.conj_exponent))


def is_hermitian_self_orthogonal(G: GFMatrix, ctx: HermitianContext) -> bool:
    return hermitian_gram(G, ctx).is_zero()


def euclidean_dual(G: GFMatrix) -> GFMatrix:
    return kernel(G)


def hermitian_dual(G: GFMatrix, ctx: HermitianContext) -> GFMatrix:
    # b is Hermitian-orthogonal to G iff b^(p^e) lies in the Euclidean dual
    H = kernel(G)
    return frobenius_matrix(H, (ctx.field.m - ctx.conj_exponent) % ctx.field.m)
