"""Ideal calculus on finite semirings.

Ideals are bitmasks over the parent semiring's element indices. Every
predicate scans its tuple space in lexicographic order and reports the first
failing tuple as its witness, so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .core import ORDER_CAP, CapacityError, FiniteSemiring, is_local, is_semidomain, units


class DomainError(ValueError):
    """An operation was called outside its precondition (e.g. a non-prime ideal)."""


@dataclass(frozen=True)
class Check:
    """Outcome of a predicate: truthy iff it holds, with a witness when it does not."""

    ok: bool
    witness: tuple | None = None
    extra: object = field(default=None, compare=False)

    def __bool__(self):
        return self.ok


class Ideal:
    __slots__ = ("semiring", "mask")

    def __init__(self, semiring: FiniteSemiring, mask: int):
        self.semiring = semiring
        self.mask = mask

    @classmethod
    def from_members(cls, S, members):
        return cls(S, _mask(members))

    @property
    def members(self) -> frozenset:
        return frozenset(x for x in self.semiring.elements if self.mask >> x & 1)

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __iter__(self):
        return (x for x in self.semiring.elements if self.mask >> x & 1)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.mask == other.mask and (self.semiring is other.semiring or self.semiring == other.semiring)

    def __hash__(self):
        return hash((self.mask, self.semiring.order))

    def __le__(self, other):
        _same_parent(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    @property
    def is_proper(self):
        return self.mask != self.semiring.full_mask

    @property
    def is_zero(self):
        return self.mask == 1 << self.semiring.zero

    def names(self):
        return sorted(self.semiring.name(x) for x in self)

    def __repr__(self):
        return "{" + ", ".join(self.semiring.name(x) for x in self) + "}"


def _mask(members):
    m = 0
    for x in members:
        m |= 1 << x
    return m


def _same_parent(a, b):
    if a.semiring is not b.semiring and a.semiring != b.semiring:
        raise DomainError("ideals belong to different semirings")


def _require_cap(S):
    if S.order > ORDER_CAP:
        raise CapacityError(f"order {S.order} exceeds the subset-scan cap {ORDER_CAP}")


def ideal_violation(S: FiniteSemiring, mask: int):
    """First reason a subset fails to be an ideal, or None.

    Witnesses: ``("empty",)``, ``("add", x, y)`` with x+y outside, or
    ``("absorb", s, x)`` with s*x outside.
    """
    if mask == 0:
        return ("empty",)
    members = [x for x in S.elements if mask >> x & 1]
    for x in members:
        for y in members:
            if not mask >> S.add[x][y] & 1:
                return ("add", x, y)
    for s in S.elements:
        for x in members:
            if not mask >> S.mul[s][x] & 1:
                return ("absorb", s, x)
    return None


def is_ideal_mask(S, mask) -> bool:
    return ideal_violation(S, mask) is None


def ideal_closure(S: FiniteSemiring, gens) -> Ideal:
    mask = 1 << S.zero
    for g in gens:
        for s in S.elements:
            mask |= 1 << S.mul[s][g]
    return Ideal(S, _close(S, mask))


def _close(S, mask):
    while True:
        members = [x for x in S.elements if mask >> x & 1]
        new = mask
        for x in members:
            for y in members:
                new |= 1 << S.add[x][y]
            for s in S.elements:
                new |= 1 << S.mul[s][x]
        if new == mask:
            return mask
        mask = new


def principal(S, x) -> Ideal:
    return ideal_closure(S, [x])


@lru_cache(maxsize=4096)
def all_ideals(S: FiniteSemiring) -> tuple:
    """Every ideal of S, ordered by membership mask (so (0) first and S last)."""
    _require_cap(S)
    zero_bit = 1 << S.zero
    return tuple(Ideal(S, m) for m in range(1 << S.order) if m & zero_bit and is_ideal_mask(S, m))


def zero_ideal(S) -> Ideal:
    return Ideal(S, 1 << S.zero)


def whole(S) -> Ideal:
    return Ideal(S, S.full_mask)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _same_parent(a, b)
    S = a.semiring
    mask = _mask(S.add[x][y] for x in a for y in b)
    assert is_ideal_mask(S, mask)
    return Ideal(S, mask)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    _same_parent(a, b)
    S = a.semiring
    return Ideal(S, _close(S, _mask(S.mul[x][y] for x in a for y in b) | 1 << S.zero))


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    _same_parent(a, b)
    return Ideal(a.semiring, a.mask & b.mask)


def ideal_power(a: Ideal, n: int) -> Ideal:
    if n < 1:
        raise DomainError("ideal powers start at 1")
    r = a
    for _ in range(n - 1):
        r = ideal_product(r, a)
    return r


def radical(a: Ideal) -> Ideal:
    S = a.semiring
    return Ideal(S, _mask(s for s in S.elements if any(p in a for p in S.power_table[s])))


def is_subtractive_ideal(a: Ideal) -> Check:
    S = a.semiring
    for x in a:
        for y in S.elements:
            if S.add[x][y] in a and y not in a:
                return Check(False, (x, y))
    return Check(True)


def is_prime(p: Ideal) -> Check:
    if not p.is_proper:
        return Check(False, None)
    S = p.semiring
    for a, b in product(S.elements, repeat=2):
        if S.mul[a][b] in p and a not in p and b not in p:
            return Check(False, (a, b))
    return Check(True)


def is_maximal(m: Ideal) -> bool:
    if not m.is_proper:
        return False
    return not any(m < a and a.is_proper for a in all_ideals(m.semiring))


def is_primary(q: Ideal) -> Check:
    """Primary test; on success ``extra`` holds the associated prime."""
    if not q.is_proper:
        return Check(False, None)
    S = q.semiring
    rad = radical(q)
    for x, y in product(S.elements, repeat=2):
        if S.mul[x][y] in q and x not in q and y not in rad:
            return Check(False, (x, y))
    assert is_prime(rad)
    assert all(rad <= p for p in all_ideals(S) if q <= p and is_prime(p))
    return Check(True, None, rad)


def is_two_absorbing(a: Ideal) -> Check:
    if not a.is_proper:
        return Check(False, None)
    S = a.semiring
    mul = S.mul
    inside = [x in a for x in S.elements]
    for x, y, z in product(S.elements, repeat=3):
        xy = mul[x][y]
        if inside[mul[xy][z]] and not (inside[xy] or inside[mul[y][z]] or inside[mul[x][z]]):
            return Check(False, (x, y, z))
    return Check(True)


def is_divided_prime(p: Ideal) -> bool:
    if not is_prime(p):
        raise DomainError(f"{p!r} is not a prime ideal")
    S = p.semiring
    return all(p < principal(S, x) for x in S.elements if x not in p)


def divided_witness(p: Ideal):
    """First x outside p whose principal ideal does not strictly contain p."""
    S = p.semiring
    for x in S.elements:
        if x not in p and not p < principal(S, x):
            return x
    return None


@lru_cache(maxsize=4096)
def prime_ideals(S: FiniteSemiring) -> tuple:
    return tuple(p for p in all_ideals(S) if is_prime(p))


def minimal_primes(a: Ideal) -> list:
    if not a.is_proper:
        raise DomainError("minimal primes need a proper ideal")
    over = [p for p in prime_ideals(a.semiring) if a <= p]
    return [p for p in over if not any(q < p for q in over)]


def _is_mc_set(S, mask):
    if not mask >> S.one & 1:
        return False
    members = [x for x in S.elements if mask >> x & 1]
    return all(mask >> S.mul[x][y] & 1 for x in members for y in members)


def characterize_minimal_prime(a: Ideal, p: Ideal):
    """Evaluate the three equivalent descriptions of "p is minimal over a".

    Returns booleans (listed among Min(a), complement is a maximal MC-set
    disjoint from a, every x in p has y outside p with y*x**i in a).
    """
    _same_parent(a, p)
    if not is_prime(p) or not a <= p:
        raise DomainError("need a prime p containing a")
    S = a.semiring
    cond1 = p in minimal_primes(a)

    outside = S.full_mask & ~p.mask
    free = [x for x in S.elements if x in p and x not in a]
    cond2 = _is_mc_set(S, outside) and outside & a.mask == 0
    if cond2:
        for bits in range(1, 1 << len(free)):
            w = outside | _mask(x for k, x in enumerate(free) if bits >> k & 1)
            if _is_mc_set(S, w):
                cond2 = False
                break

    def powers_from_zero(x):
        yield S.one
        yield from S.power_table[x]

    cond3 = all(
        any(S.mul[y][xi] in a for y in S.elements if y not in p for xi in powers_from_zero(x))
        for x in p
    )
    return cond1, cond2, cond3


@lru_cache(maxsize=4096)
def two_absorbing_ideals(S: FiniteSemiring) -> tuple:
    return tuple(a for a in all_ideals(S) if is_two_absorbing(a))


def minimal_two_absorbing(a: Ideal) -> list:
    if not a.is_proper:
        raise DomainError("2-Min needs a proper ideal")
    over = [q for q in two_absorbing_ideals(a.semiring) if a <= q]
    return [q for q in over if not any(r < q for r in over)]


def maximal_ideals(S) -> list:
    return [m for m in all_ideals(S) if is_maximal(m)]


@dataclass
class SemiringClassification:
    subtractive: bool
    semidomain: bool
    valuation: bool
    divided: bool
    local: bool
    weak_gaussian: bool
    two_ab: bool
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("subtractive", "semidomain", "valuation", "divided", "local", "weak_gaussian", "two_ab")

    def flags(self) -> dict:
        return {f: getattr(self, f) for f in self.FLAGS}


@lru_cache(maxsize=4096)
def classify_semiring(S: FiniteSemiring) -> SemiringClassification:
    """Seven structural flags, each false flag paired with a witness.

    Witness shapes:
      subtractive / weak_gaussian: (ideal, (x, y))
      semidomain: (x, y, z); valuation: ("semidomain", triple) or ("incomparable", a, b)
      divided: (prime, x); local: tuple of maximal ideals
      two_ab: (ideal, (a, b)) for a 2-absorbing ideal that fails primality at (a, b)
    """
    _require_cap(S)
    ideals = all_ideals(S)
    w = {}

    subtractive = True
    for a in ideals:
        c = is_subtractive_ideal(a)
        if not c:
            subtractive = False
            w["subtractive"] = (a, c.witness)
            break

    semidomain, triple = is_semidomain(S)
    if not semidomain:
        w["semidomain"] = triple

    valuation = semidomain
    if not semidomain:
        w["valuation"] = ("semidomain", triple)
    else:
        for a, b in product(ideals, repeat=2):
            if not (a <= b or b <= a):
                valuation = False
                w["valuation"] = ("incomparable", a, b)
                break

    divided = True
    for p in prime_ideals(S):
        x = divided_witness(p)
        if x is not None:
            divided = False
            w["divided"] = (p, x)
            break

    local, _ = is_local(S)
    if not local:
        w["local"] = tuple(maximal_ideals(S))

    weak_gaussian = True
    for p in prime_ideals(S):
        c = is_subtractive_ideal(p)
        if not c:
            weak_gaussian = False
            w["weak_gaussian"] = (p, c.witness)
            break

    two_ab = True
    for a in two_absorbing_ideals(S):
        c = is_prime(a)
        if not c:
            two_ab = False
            w["two_ab"] = (a, c.witness)
            break

    return SemiringClassification(subtractive, semidomain, valuation, divided, local, weak_gaussian, two_ab, w)


__all__ = [
    "Check", "DomainError", "Ideal", "SemiringClassification", "all_ideals", "characterize_minimal_prime",
    "classify_semiring", "divided_witness", "ideal_closure", "ideal_intersection", "ideal_power", "ideal_product",
    "ideal_sum", "ideal_violation", "is_divided_prime", "is_ideal_mask", "is_maximal", "is_primary", "is_prime",
    "is_subtractive_ideal", "is_two_absorbing", "maximal_ideals", "minimal_primes", "minimal_two_absorbing",
    "prime_ideals", "principal", "radical", "two_absorbing_ideals", "units", "whole", "zero_ideal",
]
