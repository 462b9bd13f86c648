"""Closed-form models: the min-plus semiring on N u {inf} and named finite semirings.

In the min-plus semiring addition is ``min`` (identity ``inf``, the semiring
zero) and multiplication is ``+`` (identity ``0``, the semiring one).  Every
ideal is ``{inf}``, an up-set ``[k, inf]`` or the whole carrier.

Predicates on min-plus ideals are decided by scanning the representatives
``0..C`` and ``inf`` with ``C = 3*T + 1`` where ``T`` is the largest threshold
the predicate tests against.  Every condition is a threshold test on a sum of
at most three carrier values, and any value above ``C`` behaves like ``C``
under such tests, so the finite scan decides the infinite quantifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .core import FiniteSemiring, from_tables
from .ideals import Check

INF = math.inf

ZERO, UPSET, WHOLE = "zero", "upset", "whole"


@dataclass(frozen=True, order=False)
class MinPlusIdeal:
    tag: str
    k: int = 0

    def __post_init__(self):
        if self.tag not in (ZERO, UPSET, WHOLE):
            raise ValueError(f"unknown min-plus ideal tag {self.tag!r}")
        if self.tag == UPSET and (not isinstance(self.k, int) or self.k < 1):
            raise ValueError(f"UpSet threshold must be a positive integer, got {self.k!r}")
        if self.tag != UPSET and self.k != 0:
            raise ValueError("only UpSet carries a threshold")

    def __contains__(self, x):
        if self.tag == WHOLE:
            return True
        if self.tag == ZERO:
            return x == INF
        return x >= self.k

    @property
    def threshold(self):
        """Smallest finite member (inf for the zero ideal)."""
        return {ZERO: INF, WHOLE: 0}.get(self.tag, self.k)

    def __le__(self, other):
        return self.threshold >= other.threshold

    def __lt__(self, other):
        return self.threshold > other.threshold

    @property
    def is_proper(self):
        return self.tag != WHOLE

    @property
    def is_zero(self):
        return self.tag == ZERO

    def to_json(self):
        return {"tag": self.tag, "k": self.k} if self.tag == UPSET else {"tag": self.tag}

    @classmethod
    def from_json(cls, data):
        return cls(data["tag"], data.get("k", 0))

    def __repr__(self):
        if self.tag == UPSET:
            return f"UpSet({self.k})"
        return self.tag.capitalize()


Zero = MinPlusIdeal(ZERO)
Whole = MinPlusIdeal(WHOLE)


def UpSet(k: int) -> MinPlusIdeal:
    return Whole if k == 0 else MinPlusIdeal(UPSET, k)


def _from_threshold(t):
    return Zero if t == INF else UpSet(t)


def principal_minplus(x) -> MinPlusIdeal:
    """(x) = {x + s : s} = [x, inf]."""
    return _from_threshold(x)


def minplus_arith(op: str, a: MinPlusIdeal, b: MinPlusIdeal | None = None, n: int | None = None) -> MinPlusIdeal:
    if not isinstance(a, MinPlusIdeal) or (b is not None and not isinstance(b, MinPlusIdeal)):
        raise TypeError("operands must be MinPlusIdeal")
    if op == "radical":
        return Zero if a.is_zero else (Whole if a.tag == WHOLE else UpSet(1))
    if op == "power":
        if n is None or n < 1:
            raise ValueError("power needs n >= 1")
        return _from_threshold(a.threshold * n)
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "sum":
        return _from_threshold(min(a.threshold, b.threshold))
    if op == "product":
        return _from_threshold(a.threshold + b.threshold)
    if op == "intersection":
        return _from_threshold(max(a.threshold, b.threshold))
    raise ValueError(f"unknown operation {op!r}")


def representatives(cap: int):
    return list(range(cap + 1)) + [INF]


def _cap(a: MinPlusIdeal, extra=0):
    t = a.threshold if a.tag == UPSET else 1
    return 3 * max(t, extra, 1) + 1


def _power_in(y, a, t):
    """Is some n-th power (n*y) of y in a?  n up to t suffices for thresholds <= t."""
    return any(n * y in a for n in range(1, t + 1))


def minplus_predicate(pred: str, a: MinPlusIdeal) -> Check:
    """Decide a predicate on a min-plus ideal by a capped exhaustive scan.

    Witnesses are carrier values (ints or inf), lexicographically first.
    """
    if not isinstance(a, MinPlusIdeal):
        raise TypeError("operand must be a MinPlusIdeal")
    C = _cap(a)
    reps = representatives(C)
    t = max(a.threshold if a.tag == UPSET else 1, 1)
    if pred == "subtractive":
        for x in reps:
            if x not in a:
                continue
            for y in reps:
                if min(x, y) in a and y not in a:
                    return Check(False, (x, y))
        return Check(True)
    if not a.is_proper and pred in ("prime", "maximal", "primary", "two_absorbing", "divided"):
        return Check(False)
    if pred == "prime":
        for x, y in product(reps, repeat=2):
            if x + y in a and x not in a and y not in a:
                return Check(False, (x, y))
        return Check(True)
    if pred == "primary":
        for x, y in product(reps, repeat=2):
            if x + y in a and x not in a and not _power_in(y, a, t):
                return Check(False, (x, y))
        return Check(True, None, minplus_arith("radical", a))
    if pred == "two_absorbing":
        for x, y, z in product(reps, repeat=3):
            if x + y + z in a and not (x + y in a or y + z in a or x + z in a):
                return Check(False, (x, y, z))
        return Check(True)
    if pred == "maximal":
        # a is maximal iff a + (x) is the whole carrier for every x outside a
        for x in reps:
            if x not in a and minplus_arith("sum", a, principal_minplus(x)).is_proper:
                return Check(False, (x,))
        return Check(True)
    if pred == "divided":
        if not minplus_predicate("prime", a):
            raise ValueError(f"{a!r} is not prime")
        for x in reps:
            if x not in a and not a < principal_minplus(x):
                return Check(False, (x,))
        return Check(True)
    raise ValueError(f"unknown predicate {pred!r}")


def minplus_ideal_family(K: int) -> list:
    """Zero, UpSet(K), ..., UpSet(1), Whole: the ideals with threshold <= K."""
    return [Zero] + [UpSet(k) for k in range(K, 0, -1)] + [Whole]


def minplus_units(cap: int = 8):
    reps = representatives(cap)
    return [x for x in reps if any(x + t == 0 for t in reps)]


def minplus_classification(K: int = 6) -> dict:
    """Flags with witnesses for the min-plus semiring, over ideals up to UpSet(K).

    Returns ``{"flags": {...}, "witnesses": {...}}``.
    """
    fam = minplus_ideal_family(K)
    reps = representatives(3 * K + 1)
    w = {}
    sub = next(((a, c.witness) for a in fam if not (c := minplus_predicate("subtractive", a))), None)
    if sub:
        w["subtractive"] = sub
    semidomain = True
    for x, y, z in product(reps, repeat=3):
        if x != INF and y != z and x + y == x + z:
            semidomain = False
            w["semidomain"] = (x, y, z)
            break
    chain = all(a <= b or b <= a for a in fam for b in fam)
    valuation = semidomain and chain
    primes = [a for a in fam if minplus_predicate("prime", a)]
    div_fail = next(((p, c.witness) for p in primes if not (c := minplus_predicate("divided", p))), None)
    if div_fail:
        w["divided"] = div_fail
    non_units = [x for x in reps if x not in minplus_units(3 * K + 1)]
    local = non_units == [x for x in reps if x in UpSet(1)]
    wg_fail = next(((p, c.witness) for p in primes if not (c := minplus_predicate("subtractive", p))), None)
    if wg_fail:
        w["weak_gaussian"] = wg_fail
    two_ab_fail = None
    for a in fam:
        if minplus_predicate("two_absorbing", a):
            c = minplus_predicate("prime", a)
            if not c:
                two_ab_fail = (a, c.witness)
                break
    if two_ab_fail:
        w["two_ab"] = two_ab_fail
    flags = {
        "subtractive": sub is None,
        "semidomain": semidomain,
        "valuation": valuation,
        "divided": div_fail is None,
        "local": local,
        "weak_gaussian": wg_fail is None,
        "two_ab": two_ab_fail is None,
    }
    return {"flags": flags, "witnesses": w}


# ---------------------------------------------------------------------------
# finite models with hand-derived ideal lattices


PREDICATES = ("prime", "maximal", "primary", "two_absorbing", "subtractive", "divided")
FLAGS = ("subtractive", "semidomain", "valuation", "divided", "local", "weak_gaussian", "two_ab")


@dataclass(frozen=True)
class FiniteModel:
    """A named finite semiring with its ideal lattice written down in closed form.

    ``ideals`` maps a label to its member names; ``facts`` maps a label to the
    set of predicates that hold for it; ``radicals`` maps a label to the label
    of its radical.  ``classification`` gives the seven structural flags.
    """

    name: str
    semiring: FiniteSemiring
    ideals: dict
    facts: dict
    radicals: dict
    products: dict
    unit_names: frozenset
    classification: dict

    def predicate(self, pred, label) -> bool:
        if pred not in PREDICATES:
            raise ValueError(f"unknown predicate {pred!r}")
        return pred in self.facts[label]

    def arith(self, op, a, b=None):
        """Closed-form ideal arithmetic on labels."""
        if op == "radical":
            return self.radicals[a]
        if op == "product":
            return self.products[frozenset((a, b))]
        ia, ib = self.ideals[a], self.ideals[b]
        if op == "sum":
            # every catalogued lattice is a chain, so a sum is the larger summand
            target = max((ia, ib), key=len)
        elif op == "intersection":
            target = ia & ib
        else:
            raise ValueError(f"unknown operation {op!r}")
        for label, members in self.ideals.items():
            if members == target:
                return label
        raise ValueError(f"{op} of {a}, {b} is not a listed ideal")


def _named(add, mul, names):
    return from_tables(add, mul, names)


def boolean_model() -> FiniteModel:
    return chain_model(2, name="boolean")


def f2_model() -> FiniteModel:
    S = _named([[0, 1], [1, 0]], [[0, 0], [0, 1]], ["0", "1"])
    ideals = {"(0)": frozenset({"0"}), "S": frozenset({"0", "1"})}
    facts = {"(0)": set(PREDICATES), "S": {"subtractive"}}
    return FiniteModel(
        "f2", S, ideals, facts, {"(0)": "(0)", "S": "S"},
        {frozenset(("(0)",)): "(0)", frozenset(("(0)", "S")): "(0)", frozenset(("S",)): "S"},
        frozenset({"1"}), dict.fromkeys(FLAGS, True),
    )


def paper_three_element() -> FiniteModel:
    """S = {0, u, 1} with 1+u = u, 1+1 = 1, u+u = u*u = u."""
    # indices: 0 -> "0", 1 -> "1", 2 -> "u"
    add = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    S = _named(add, mul, ["0", "1", "u"])
    ideals = {"(0)": frozenset({"0"}), "{0,u}": frozenset({"0", "u"}), "S": frozenset({"0", "u", "1"})}
    facts = {
        "(0)": {"prime", "primary", "two_absorbing", "subtractive", "divided"},
        "{0,u}": {"prime", "maximal", "primary", "two_absorbing", "divided"},
        "S": {"subtractive"},
    }
    products = {}
    for a in ideals:
        for b in ideals:
            if "(0)" in (a, b):
                products[frozenset((a, b))] = "(0)"
            elif a == b == "S":
                products[frozenset((a, b))] = "S"
            else:
                products[frozenset((a, b))] = "{0,u}"
    classification = {
        "subtractive": False, "semidomain": False, "valuation": False, "divided": True,
        "local": True, "weak_gaussian": False, "two_ab": True,
    }
    return FiniteModel(
        "paper3", S, ideals, facts, {k: k for k in ideals}, products, frozenset({"1"}), classification,
    )


def chain_model(n: int, name: str | None = None) -> FiniteModel:
    """({0,...,n-1}, max, min): zero is 0, one is n-1.

    Ideals are the down-sets D_k = {0..k}; all proper ones are prime and
    radical, D_{n-2} is the unique maximal ideal, and the only units are n-1.
    """
    if n < 2:
        raise ValueError("chain needs at least two elements")
    # index 0 -> value 0, index 1 -> value n-1, index i>=2 -> value i-1
    value = [0, n - 1] + list(range(1, n - 1))
    index = {v: i for i, v in enumerate(value)}
    add = [[index[max(value[i], value[j])] for j in range(n)] for i in range(n)]
    mul = [[index[min(value[i], value[j])] for j in range(n)] for i in range(n)]
    S = _named(add, mul, [str(v) for v in value])
    ideals = {f"D{k}": frozenset(str(v) for v in range(k + 1)) for k in range(n)}
    facts = {}
    for k in range(n):
        label = f"D{k}"
        if k < n - 1:
            facts[label] = {"prime", "primary", "two_absorbing", "subtractive", "divided"}
            if k == n - 2:
                facts[label].add("maximal")
        else:
            facts[label] = {"subtractive"}
    products = {frozenset((f"D{i}", f"D{j}")): f"D{min(i, j)}" for i in range(n) for j in range(n)}
    classification = dict.fromkeys(FLAGS, True)
    classification["semidomain"] = classification["valuation"] = n == 2
    return FiniteModel(
        name or f"chain:{n}", S, ideals, facts, {k: k for k in ideals}, products,
        frozenset({str(n - 1)}), classification,
    )


@dataclass(frozen=True)
class MinPlusModel:
    name: str = "minplus"
    family_cap: int = 6

    def classification(self):
        return minplus_classification(self.family_cap)["flags"]


def builtin_models(chain_orders=(2, 3, 4, 5)) -> dict:
    """Catalog of named models keyed by CLI selector."""
    cat = {"boolean": boolean_model(), "f2": f2_model(), "paper3": paper_three_element()}
    for n in chain_orders:
        cat[f"chain:{n}"] = chain_model(n)
    cat["minplus"] = MinPlusModel()
    return cat


def get_model(selector: str):
    if selector.startswith("chain:"):
        return chain_model(int(selector.split(":", 1)[1]))
    cat = builtin_models(())
    if selector not in cat:
        raise KeyError(f"unknown model {selector!r}; choose from boolean, f2, paper3, chain:N, minplus")
    return cat[selector]
