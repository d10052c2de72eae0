"""Cyclotomic cosets of Z/(p^{2r} - 1) under multiplication by p^{2s}."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IndexOutOfRange, InvalidTower, NonPrimeCharacteristic
from .gf import is_prime


@dataclass(frozen=True)
class Coset:
    rep: int
    members: tuple[int, ...]  # ascending

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CosetFamily:
    """Minimal cosets sorted by representative; ``{0}`` is its own coset."""

    modulus: int  # p^{2r} - 1
    base: int  # p^{2s}
    cosets: tuple[Coset, ...]
    _index: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def reps(self) -> tuple[int, ...]:
        return tuple(c.rep for c in self.cosets)

    @property
    def z(self) -> int:
        """Index of the last representative."""
        return len(self.cosets) - 1

    def coset_of(self, x: int) -> Coset:
        return self.cosets[self._index[x]]

    def index_of(self, x: int) -> int:
        """Position (in representative order) of the coset containing x."""
        return self._index[x]


@dataclass(frozen=True)
class ExponentSet:
    members: tuple[int, ...]
    closed_under_base: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)


def cyclotomic_cosets(p: int, s: int, r: int) -> CosetFamily:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if s < 1 or r < 1 or r % s:
        raise InvalidTower(f"s={s} must divide r={r}")
    modulus = p ** (2 * r) - 1
    base = p ** (2 * s)
    index: dict[int, int] = {0: 0}
    cosets = [Coset(0, (0,))]
    for a in range(1, modulus):
        if a in index:
            continue
        orbit = []
        x = a
        while True:
            orbit.append(x)
            x = x * base % modulus
            if x == a:
                break
        for y in orbit:
            index[y] = len(cosets)
        cosets.append(Coset(a, tuple(sorted(orbit))))
    return CosetFamily(modulus, base, tuple(cosets), index)


def delta_sigma(F: CosetFamily, t: int, *, drop_zero: bool = False) -> ExponentSet:
    """Union of the first t+1 cosets; ``drop_zero`` leaves out the coset {0}."""
    if not 0 <= t <= F.z:
        raise IndexOutOfRange(f"t={t} outside [0, {F.z}]")
    start = 1 if drop_zero else 0
    members = sorted(x for c in F.cosets[start : t + 1] for x in c.members)
    return ExponentSet(tuple(members), closed_under_base=True)


def closure(F: CosetFamily, exponents) -> ExponentSet:
    """Smallest union of cosets containing ``exponents``."""
    reps = {F.index_of(x % F.modulus if x else 0) for x in exponents}
    members = sorted(x for i in reps for x in F.cosets[i].members)
    return ExponentSet(tuple(members), closed_under_base=True)


def is_coset_closed(F: CosetFamily, exponents) -> bool:
    s = set(exponents)
    return all((x * F.base) % F.modulus in s for x in s if x)


def trace_bound(q: int, n: int) -> int:
    """q^n - floor((q-1)/2) * (q^{n-1} + ... + q) - 1."""
    half = (q - 1) // 2
    return q**n - half * sum(q**i for i in range(1, n)) - 1


def max_admissible_t(F: CosetFamily, q: int, n: int) -> int:
    """Largest t with a_t below the trace bound (always >= 0 since a_0 = 0)."""
    bound = trace_bound(q, n)
    t = 0
    for i, a in enumerate(F.reps):
        if a < bound:
            t = i
        else:
            break
    return t
