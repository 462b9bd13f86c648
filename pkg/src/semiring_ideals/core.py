"""Finite commutative semirings given by Cayley tables.

A :class:`FiniteSemiring` is only ever built by :func:`validate_semiring`,
which checks every axiom exhaustively and relabels the carrier so that the
additive identity is index 0 and the multiplicative identity is index 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

ORDER_CAP = 12

AXIOMS = (
    "add-assoc",
    "add-comm",
    "add-identity",
    "mul-assoc",
    "mul-comm",
    "mul-identity",
    "one-equals-zero",
    "distributivity",
    "absorption",
)


class MalformedTableError(ValueError):
    """Raised for input that is not a pair of square tables over one carrier.

    ``location`` names the offending table/row/column when known.
    """

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class CapacityError(ValueError):
    """An operation was asked to scan a structure above its size cap."""


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} at {self.witness}"


class AxiomError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class FiniteSemiring:
    """A validated commutative semiring with zero at index 0 and one at index 1.

    Tables are tuples of tuples of element indices; instances are immutable
    and hashable so they can be shared across worker processes and used as
    cache keys.
    """

    __slots__ = ("order", "element_names", "add", "mul", "_hash", "__dict__")

    zero = 0
    one = 1

    def __init__(self, element_names, add, mul):
        self.order = len(element_names)
        self.element_names = tuple(element_names)
        self.add = tuple(tuple(row) for row in add)
        self.mul = tuple(tuple(row) for row in mul)
        # names take part in equality so caches never hand back another labelling
        self._hash = hash((self.element_names, self.add, self.mul))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteSemiring):
            return NotImplemented
        return self.add == other.add and self.mul == other.mul and self.element_names == other.element_names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSemiring({list(self.element_names)})"

    def __getstate__(self):
        return (self.element_names, self.add, self.mul)

    def __setstate__(self, state):
        self.__init__(*state)

    @property
    def elements(self):
        return range(self.order)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def name(self, x: int) -> str:
        return self.element_names[x]

    def power(self, x: int, n: int) -> int:
        r = self.one
        for _ in range(n):
            r = self.mul[r][x]
        return r

    @cached_property
    def power_table(self):
        """``power_table[x][n-1]`` is x**n for 1 <= n <= order."""
        rows = []
        for x in self.elements:
            row, r = [], self.one
            for _ in range(self.order):
                r = self.mul[r][x]
                row.append(r)
            rows.append(tuple(row))
        return tuple(rows)


def _check_shape(add, mul, zero, one):
    n = len(add)
    if n < 2:
        raise MalformedTableError(f"order must be at least 2, got {n}", "add")
    if len(mul) != n:
        raise MalformedTableError(f"has {len(mul)} rows, expected {n}", "mul")
    for tname, table in (("add", add), ("mul", mul)):
        for i, row in enumerate(table):
            if len(row) != n:
                raise MalformedTableError(f"has {len(row)} entries, expected {n}", f"{tname} row {i}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise MalformedTableError(f"entry {v!r} out of range", f"{tname}[{i}][{j}]")
    for label, v in (("zero", zero), ("one", one)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise MalformedTableError(f"index {v!r} out of range", label)
    return n


def find_violations(add, mul, zero, one):
    """Return one lexicographically-first witness per violated axiom.

    The check is exhaustive over all element tuples; an empty list means the
    tables define a commutative semiring with the given identities.
    """
    n = _check_shape(add, mul, zero, one)
    found = {}

    def note(axiom, witness):
        if axiom not in found:
            found[axiom] = AxiomViolation(axiom, witness)

    if zero == one:
        note("one-equals-zero", ())
    for x in range(n):
        if add[zero][x] != x or add[x][zero] != x:
            note("add-identity", (x,))
        if mul[one][x] != x or mul[x][one] != x:
            note("mul-identity", (x,))
        if mul[zero][x] != zero or mul[x][zero] != zero:
            note("absorption", (x,))
    for x, y in product(range(n), repeat=2):
        if add[x][y] != add[y][x]:
            note("add-comm", (x, y))
        if mul[x][y] != mul[y][x]:
            note("mul-comm", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            note("add-assoc", (x, y, z))
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            note("mul-assoc", (x, y, z))
        if (mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
                or mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]):
            note("distributivity", (x, y, z))
    return [found[a] for a in AXIOMS if a in found]


def relabel(add, mul, perm):
    """Tables of the isomorphic copy where old element i becomes perm[i]."""
    n = len(add)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    new_add = [[perm[add[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    new_mul = [[perm[mul[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    return new_add, new_mul


def validate_semiring(add, mul, zero=0, one=1, element_names=None) -> FiniteSemiring:
    """Check the axioms and return the canonicalised semiring.

    Raises MalformedTableError for shape problems and AxiomError (carrying
    every violated axiom) otherwise.
    """
    n = _check_shape(add, mul, zero, one)
    if element_names is None:
        element_names = [str(i) for i in range(n)]
    if len(element_names) != n or len(set(element_names)) != n:
        raise MalformedTableError("element names must be distinct and match the order", "elements")
    violations = find_violations(add, mul, zero, one)
    if violations:
        raise AxiomError(violations)
    rest = [x for x in range(n) if x not in (zero, one)]
    perm = [0] * n
    for new, old in enumerate([zero, one] + rest):
        perm[old] = new
    new_add, new_mul = relabel(add, mul, perm)
    names = [None] * n
    for old, new in enumerate(perm):
        names[new] = element_names[old]
    return FiniteSemiring(names, new_add, new_mul)


def from_tables(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], names=None) -> FiniteSemiring:
    """Shorthand for tables already using 0 as zero and 1 as one."""
    return validate_semiring(add, mul, 0, 1, names)


def units(S: FiniteSemiring) -> frozenset:
    return frozenset(x for x in S.elements if any(S.mul[x][t] == S.one for t in S.elements))


def is_local(S: FiniteSemiring):
    """Return ``(True, ideal)`` when the non-units form an ideal, else ``(False, None)``."""
    from .ideals import Ideal, is_ideal_mask

    u = units(S)
    mask = sum(1 << x for x in S.elements if x not in u)
    if is_ideal_mask(S, mask):
        return True, Ideal(S, mask)
    return False, None


def is_semidomain(S: FiniteSemiring):
    """Multiplicative cancellation; returns ``(flag, (x, y, z) or None)``."""
    for x, y, z in product(S.elements, repeat=3):
        if x != S.zero and y != z and S.mul[x][y] == S.mul[x][z]:
            return False, (x, y, z)
    return True, None


def is_ring(S: FiniteSemiring) -> bool:
    """Every element has an additive inverse."""
    return all(any(S.add[x][y] == S.zero for y in S.elements) for x in S.elements)
