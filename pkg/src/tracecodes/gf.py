"""Finite fields GF(p^m) with integer-coded elements.

An element is stored as the integer ``sum(c_i * p**i)`` where ``c_i`` are its
coordinates in the polynomial basis ``1, X, ..., X^(m-1)``.  Fields whose order
fits the table budget carry log/antilog tables, and all array operations
(``add``, ``mul``, ``power``, ...) act elementwise on numpy integer arrays of
such codes.  Larger fields only support scalar arithmetic.

Default moduli come from a Conway polynomial table shipped with the package,
so that subfields embed compatibly: GF(p^k) sits inside GF(p^m) as the powers
of ``g**((p^m - 1) // (p^k - 1))``.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    MissingConwayEntry,
    NonDivisorDegree,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

DEFAULT_TABLE_BUDGET = 1 << 20
CONWAY_ENV = "TRACECODES_CONWAY"
_ADD_TABLE_LIMIT = 4096


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), coefficient lists low -> high


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_mod(out, mod, p)


def poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return poly_mod(result, mod, p)


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _x_minus(poly: list[int], p: int) -> list[int]:
    out = list(poly) + [0] * max(0, 2 - len(poly))
    out[1] = (out[1] - 1) % p
    return _trim(out)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test: X^(p^m) = X mod f and gcd(X^(p^(m/l)) - X, f) = 1 for primes l | m."""
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    for ell in prime_factors(m):
        h = poly_powmod(x, p ** (m // ell), modulus, p)
        if len(poly_gcd(_x_minus(h, p), modulus, p)) > 1:
            return False
    return _x_minus(poly_powmod(x, p**m, modulus, p), p) == []


def is_primitive_poly(modulus: Sequence[int], p: int) -> bool:
    """Irreducible and X has multiplicative order p^m - 1 modulo ``modulus``."""
    if not is_irreducible(modulus, p):
        return False
    m = len(modulus) - 1
    order = p**m - 1
    if m == 1:
        root = (-modulus[0]) % p
        return root != 0 and all(pow(root, order // ell, p) != 1 for ell in prime_factors(order))
    return all(poly_powmod([0, 1], order // ell, modulus, p) != [1] for ell in prime_factors(order))


# ---------------------------------------------------------------------------
# Conway polynomial table


def _conway_path(path: str | os.PathLike | None = None) -> Path:
    if path is not None:
        return Path(path)
    env = os.environ.get(CONWAY_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("tracecodes") / "data" / "conway.txt"))


@functools.lru_cache(maxsize=8)
def _load_conway(path: str) -> dict[tuple[int, int], tuple[int, ...]]:
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            nums = [int(tok) for tok in line.split()]
            p, m, coeffs = nums[0], nums[1], tuple(nums[2:])
            if len(coeffs) != m + 1 or coeffs[-1] != 1:
                raise ValueError(f"bad Conway entry for ({p}, {m}) in {path}")
            table[(p, m)] = coeffs
    return table


def conway_polynomial(p: int, m: int, path: str | os.PathLike | None = None) -> tuple[int, ...]:
    table = _load_conway(str(_conway_path(path)))
    try:
        return table[(p, m)]
    except KeyError:
        raise MissingConwayEntry(f"no Conway polynomial for GF({p}^{m}) in the data file") from None


def conway_search(p: int, m: int, known: dict[tuple[int, int], Sequence[int]]) -> tuple[int, ...]:
    """Compute the Conway polynomial of degree m from those of all proper divisors.

    Candidates x^m - c1 x^(m-1) + c2 x^(m-2) - ... are scanned in
    lexicographic order of (c1, ..., cm); the first primitive one compatible
    with every subfield polynomial is returned.
    """
    order = p**m - 1
    subs = [(d, known[(p, d)]) for d in divisors(m) if d < m]
    for idx in range(p**m):
        cs = [(idx // p ** (m - 1 - i)) % p for i in range(m)]  # c1 is most significant
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        for i, c in enumerate(cs, start=1):
            coeffs[m - i] = (-c if i % 2 else c) % p
        if coeffs[0] == 0:
            continue
        if not is_primitive_poly(coeffs, p):
            continue
        ok = True
        for d, sub in subs:
            y = poly_powmod([0, 1], order // (p**d - 1), coeffs, p)
            acc: list[int] = []
            power = [1]
            for c in sub:
                if c:
                    acc = [(u + c * v) % p for u, v in _zip_pad(acc, power)]
                power = poly_mulmod(power, y, coeffs, p)
            if _trim(acc):
                ok = False
                break
        if ok:
            return tuple(coeffs)
    raise RuntimeError(f"no Conway polynomial found for ({p}, {m})")


def _zip_pad(a: list[int], b: list[int]) -> Iterable[tuple[int, int]]:
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


# ---------------------------------------------------------------------------
# fields


class FieldSpec:
    """GF(p^m) given by a monic irreducible ``modulus`` (coefficients low -> high).

    Instances are immutable and cached per (p, m, modulus); build them with
    :func:`field_create`.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int], *, table_budget: int = DEFAULT_TABLE_BUDGET):
        self.p = p
        self.m = m
        self.modulus = tuple(int(c) % p for c in modulus)
        self.order = p**m
        self._weights = np.array([p**i for i in range(m)], dtype=np.int64)
        self.generator_log_table_present = self.order <= table_budget
        self.generator = self._find_generator()
        self._digits = None
        self._add_table = None
        self._neg_table = None
        if self.generator_log_table_present:
            self._build_tables()

    # -- identity
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # -- coordinate conversion
    def to_coeffs(self, v: int) -> list[int]:
        return [(v // self.p**i) % self.p for i in range(self.m)]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        coeffs = poly_mod(coeffs, self.modulus, self.p)
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    # -- scalar arithmetic on codes (table-free fallback included)
    def s_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.from_coeffs([x + y for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def s_neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs([-x for x in self.to_coeffs(a)])

    def s_sub(self, a: int, b: int) -> int:
        return self.s_add(a, self.s_neg(b))

    def s_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.generator_log_table_present:
            return int(self._exp[self._log[a] + self._log[b]])
        return self.from_coeffs(poly_mulmod(self.to_coeffs(a), self.to_coeffs(b), self.modulus, self.p))

    def s_pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.s_inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.generator_log_table_present:
            return int(self._exp[(int(self._log[a]) * e) % (self.order - 1)])
        return self.from_coeffs(poly_powmod(self.to_coeffs(a), e % (self.order - 1), self.modulus, self.p))

    def s_inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        return self.s_pow(a, self.order - 2)

    # -- construction internals
    def _find_generator(self) -> int:
        if self.m == 1:
            x = (-self.modulus[0]) % self.p
        else:
            x = self.p  # the class of X
        if self._is_primitive_code(x):
            return x
        for cand in range(2, self.order):
            if self._is_primitive_code(cand):
                return cand
        return 1  # GF(2)

    def _is_primitive_code(self, a: int) -> bool:
        if a == 0:
            return False
        n = self.order - 1
        if n == 1:
            return a == 1
        coeffs = self.to_coeffs(a)
        return all(
            poly_powmod(coeffs, n // ell, self.modulus, self.p) != [1] for ell in prime_factors(n)
        )

    def _build_tables(self) -> None:
        q1 = self.order - 1
        exp = np.zeros(4 * q1 + 1, dtype=np.int64)
        log = np.full(self.order, 2 * q1, dtype=np.int64)
        g = self.generator
        v = 1
        if self.p == 2 and g == 2 and self.m > 1:
            top = 1 << self.m
            red = sum(c << i for i, c in enumerate(self.modulus))
            for i in range(q1):
                exp[i] = v
                log[v] = i
                v <<= 1
                if v & top:
                    v ^= red
        else:
            gc = self.to_coeffs(g)
            for i in range(q1):
                exp[i] = v
                log[v] = i
                v = self.from_coeffs(poly_mulmod(self.to_coeffs(v), gc, self.modulus, self.p))
        exp[q1 : 2 * q1] = exp[:q1]
        self._exp = exp
        self._log = log
        self._exp.flags.writeable = False
        self._log.flags.writeable = False
        self._digits = (np.arange(self.order, dtype=np.int64)[:, None] // self._weights) % self.p
        if self.p != 2:
            self._neg_table = ((self.p - self._digits) % self.p) @ self._weights
            if self.order <= _ADD_TABLE_LIMIT:
                dt = np.int16 if self.order < 2**15 else np.int32
                d = self._digits
                self._add_table = (((d[:, None, :] + d[None, :, :]) % self.p) @ self._weights).astype(dt)

    def _need_tables(self) -> None:
        if not self.generator_log_table_present:
            raise NotImplementedError(f"{self} exceeds the table budget; only scalar arithmetic is available")

    # -- vectorized arithmetic on code arrays
    def asarray(self, a) -> np.ndarray:
        return np.asarray(a, dtype=np.int64)

    def add(self, a, b) -> np.ndarray:
        self._need_tables()
        a, b = self.asarray(a), self.asarray(b)
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b].astype(np.int64)
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._weights

    def neg(self, a) -> np.ndarray:
        self._need_tables()
        a = self.asarray(a)
        if self.p == 2:
            return a.copy()
        return self._neg_table[a]

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> np.ndarray:
        self._need_tables()
        return self._exp[self._log[self.asarray(a)] + self._log[self.asarray(b)]]

    def inv(self, a) -> np.ndarray:
        self._need_tables()
        a = self.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero(f"inverse of zero in {self}")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a, b) -> np.ndarray:
        return self.mul(a, self.inv(b))

    def power(self, a, e: int) -> np.ndarray:
        """Elementwise a**e for an integer exponent (0**0 = 1)."""
        self._need_tables()
        a = self.asarray(a)
        if e < 0:
            return self.power(self.inv(a), -e)
        if e == 0:
            return np.ones_like(a)
        red = e % (self.order - 1)
        out = self._exp[(self._log[a] * red) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def frobenius(self, a, k: int) -> np.ndarray:
        return self.power(a, self.p ** (k % self.m))

    def log(self, a) -> np.ndarray:
        self._need_tables()
        a = self.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("discrete log of zero")
        return self._log[a]

    def exp(self, k) -> np.ndarray:
        self._need_tables()
        return self._exp[self.asarray(k) % (self.order - 1)]

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def prime_element(self, c: int) -> int:
        """Code of the prime-field element c mod p."""
        return c % self.p

    # -- element wrappers
    def __call__(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element code of {self}")
        return FieldElement(self, int(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive(self) -> FieldElement:
        return FieldElement(self, self.generator)


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...], table_budget: int) -> FieldSpec:
    return FieldSpec(p, m, modulus, table_budget=table_budget)


def field_create(
    p: int,
    m: int,
    modulus: Sequence[int] | None = None,
    *,
    table_budget: int = DEFAULT_TABLE_BUDGET,
    conway_path: str | os.PathLike | None = None,
) -> FieldSpec:
    """Build GF(p^m); the Conway polynomial is used when ``modulus`` is omitted."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        modulus = conway_polynomial(p, m, conway_path)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    return _cached_field(p, m, modulus, table_budget)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        return tuple(self.field.to_coeffs(self.value))

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch(f"cannot combine {self.field} with {getattr(other, 'field', other)}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.s_add(self.value, other.value))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.s_sub(self.value, other.value))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.s_mul(self.value, other.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.s_mul(self.value, self.field.s_inv(other.value)))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.s_pow(self.value, e))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.s_neg(self.value))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.s_inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"


def arith(a: FieldElement, b: FieldElement | None, op: str, e: int | None = None) -> FieldElement:
    """Dispatch one of add, sub, mul, div, pow, inv, neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** int(e)
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def frobenius(a: FieldElement, k: int) -> FieldElement:
    if k < 0:
        raise ValueError("Frobenius exponent must be >= 0")
    return a ** (a.field.p ** (k % a.field.m))


# ---------------------------------------------------------------------------
# subfields


@dataclass(frozen=True, eq=False)
class SubfieldEmbedding:
    """Injective homomorphism GF(p^m') -> GF(p^m) with tables both ways."""

    sub: FieldSpec
    sup: FieldSpec
    image_of_sub_generator: int
    table: np.ndarray  # sub code -> sup code
    inverse: np.ndarray  # sup code -> sub code, -1 outside the image

    def embed(self, a):
        if isinstance(a, FieldElement):
            if a.field != self.sub:
                raise FieldMismatch(f"{a} is not in {self.sub}")
            return FieldElement(self.sup, int(self.table[a.value]))
        return self.table[np.asarray(a, dtype=np.int64)]

    def try_project(self, b):
        """Preimage of b, or None (arrays: -1 entries) when b is outside the subfield."""
        if isinstance(b, FieldElement):
            if b.field != self.sup:
                raise FieldMismatch(f"{b} is not in {self.sup}")
            v = int(self.inverse[b.value])
            return None if v < 0 else FieldElement(self.sub, v)
        return self.inverse[np.asarray(b, dtype=np.int64)]


@functools.lru_cache(maxsize=None)
def embedding(sub: FieldSpec, sup: FieldSpec) -> SubfieldEmbedding:
    """Embed ``sub`` into ``sup`` by sending X to a root of sub's modulus.

    The root is searched among the elements of order dividing p^m' - 1,
    starting with g^((p^m-1)/(p^m'-1)), which is the root for Conway moduli.
    """
    if sub.p != sup.p or sup.m % sub.m:
        raise NonDivisorDegree(f"{sub} is not a subfield of {sup}")
    sup._need_tables()
    c = (sup.order - 1) // (sub.order - 1)
    root = None
    for j in range(1, sub.order):
        y = sup.s_pow(sup.generator, c * j)
        acc = 0
        for coeff in reversed(sub.modulus):  # Horner
            acc = sup.s_add(sup.s_mul(acc, y), coeff % sup.p)
        if acc == 0:
            root = y
            break
    if root is None:  # pragma: no cover - irreducible modulus always has a root
        raise ReducibleModulus(f"no root of {sub.modulus} in {sup}")
    powers = [sup.s_pow(root, i) for i in range(sub.m)]
    table = np.zeros(sub.order, dtype=np.int64)
    for code in range(sub.order):
        acc = 0
        for c_i, y in zip(sub.to_coeffs(code), powers):
            if c_i:
                acc = sup.s_add(acc, sup.s_mul(c_i % sup.p, y))
        table[code] = acc
    inverse = np.full(sup.order, -1, dtype=np.int64)
    inverse[table] = np.arange(sub.order)
    table.flags.writeable = False
    inverse.flags.writeable = False
    return SubfieldEmbedding(sub, sup, int(table[sub.generator]), table, inverse)


def trace_array(field: FieldSpec, a, sub_degree: int) -> np.ndarray:
    """Relative trace to GF(p^sub_degree), still coded in ``field``."""
    if sub_degree < 1 or field.m % sub_degree:
        raise NonDivisorDegree(f"{sub_degree} does not divide {field.m}")
    a = field.asarray(a)
    acc = a.copy()
    for i in range(1, field.m // sub_degree):
        acc = field.add(acc, field.frobenius(a, sub_degree * i))
    return acc


def trace_between(a: FieldElement, sub_degree: int, sub: FieldSpec | None = None) -> FieldElement:
    """Trace of ``a`` down to GF(p^sub_degree), returned in that field's representation."""
    f = a.field
    if sub_degree < 1 or f.m % sub_degree:
        raise NonDivisorDegree(f"{sub_degree} does not divide {f.m}")
    acc = a
    for i in range(1, f.m // sub_degree):
        acc = acc + frobenius(a, sub_degree * i)
    if sub is None:
        sub = field_create(f.p, sub_degree)
    out = embedding(sub, f).try_project(acc)
    if out is None:  # pragma: no cover - the trace is always Frobenius-fixed
        raise RuntimeError("trace left the subfield")
    return out


def multiplicative_order(field: FieldSpec, a: int) -> int:
    if a == 0:
        raise DivisionByZero("zero has no multiplicative order")
    n = field.order - 1
    order = n
    for ell in prime_factors(n):
        while order % ell == 0 and field.s_pow(a, order // ell) == 1:
            order //= ell
    return order
