"""Uniform ideal-lattice views over finite semirings and the min-plus model.

Statement checkers only talk to these adapters; every predicate is forwarded
to the ideal engine (finite case) or to the capped min-plus procedures.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, product

from .. import ideals as ie
from .. import models as mp
from ..core import FiniteSemiring, is_local, is_ring, units
from ..fileformat import semiring_id


class FiniteStructure:
    kind = "finite"

    def __init__(self, S: FiniteSemiring, label: str | None = None):
        self.S = S
        self.key = semiring_id(S)
        self.label = label or f"order{S.order}:{self.key}"
        self.instance_class = f"order {S.order}"

    # lattice ---------------------------------------------------------------
    @cached_property
    def ideals(self):
        return ie.all_ideals(self.S)

    @cached_property
    def proper_ideals(self):
        return [a for a in self.ideals if a.is_proper]

    @cached_property
    def primes(self):
        return list(ie.prime_ideals(self.S))

    @cached_property
    def two_absorbing(self):
        return list(ie.two_absorbing_ideals(self.S))

    @cached_property
    def maximal(self):
        return ie.maximal_ideals(self.S)

    @cached_property
    def maximal_ideal(self):
        ok, m = is_local(self.S)
        return m if ok else None

    def le(self, a, b):
        return a <= b

    def lt(self, a, b):
        return a < b

    def is_proper(self, a):
        return a.is_proper

    def is_zero(self, a):
        return a.is_zero

    # arithmetic ------------------------------------------------------------
    def product(self, a, b):
        return ie.ideal_product(a, b)

    def meet(self, a, b):
        return ie.ideal_intersection(a, b)

    def radical(self, a):
        return ie.radical(a)

    def powers(self, a):
        """a, a^2, ... up to the first repeated term (the chain is decreasing)."""
        out = [a]
        while True:
            nxt = ie.ideal_product(out[-1], a)
            if nxt == out[-1]:
                return out
            out.append(nxt)

    def power_limit(self, a):
        return self.powers(a)[-1]

    # predicates ------------------------------------------------------------
    def is_prime(self, a):
        return ie.is_prime(a)

    def is_primary(self, a):
        return ie.is_primary(a)

    def is_two_absorbing(self, a):
        return ie.is_two_absorbing(a)

    def is_subtractive(self, a):
        return ie.is_subtractive_ideal(a)

    def is_divided_prime(self, p):
        return ie.is_divided_prime(p)

    def minimal_primes(self, a):
        return ie.minimal_primes(a)

    def minimal_two_absorbing(self, a):
        return ie.minimal_two_absorbing(a)

    def characterize_minimal_prime(self, a, p):
        return ie.characterize_minimal_prime(a, p)

    # elements --------------------------------------------------------------
    @property
    def elements(self):
        return list(self.S.elements)

    def elements_in(self, a):
        return list(a)

    def mul(self, x, y):
        return self.S.mul[x][y]

    def principal(self, x):
        return ie.principal(self.S, x)

    def show(self, a):
        return "{" + ",".join(a.names()) + "}"

    def show_element(self, x):
        return self.S.name(x)

    # flags -----------------------------------------------------------------
    @cached_property
    def flags(self):
        f = ie.classify_semiring(self.S).flags()
        f["ring"] = is_ring(self.S)
        f["primes_comparable"] = all(p <= q or q <= p for p, q in combinations(self.primes, 2))
        f["field"] = units(self.S) == frozenset(x for x in self.S.elements if x != self.S.zero)
        return f


class MinPlusStructure:
    """The min-plus semiring with its ideal family truncated at UpSet(K).

    Ideal arithmetic and predicates are exact; only the quantification over
    "all ideals" is restricted to thresholds <= K.  Element-level checks scan
    the representatives 0..6K+1 and inf, enough for threshold tests up to 2K
    on sums of three values.
    """

    kind = "minplus"

    def __init__(self, K: int = 6):
        self.K = K
        self.key = f"minplus-K{K}"
        self.label = "minplus"
        self.instance_class = "minplus"
        self._reps = mp.representatives(6 * K + 1)

    @cached_property
    def ideals(self):
        return mp.minplus_ideal_family(self.K)

    @cached_property
    def proper_ideals(self):
        return [a for a in self.ideals if a.is_proper]

    @cached_property
    def primes(self):
        return [a for a in self.ideals if mp.minplus_predicate("prime", a)]

    @cached_property
    def two_absorbing(self):
        return [a for a in self.ideals if mp.minplus_predicate("two_absorbing", a)]

    @cached_property
    def maximal(self):
        return [a for a in self.ideals if mp.minplus_predicate("maximal", a)]

    @cached_property
    def maximal_ideal(self):
        return mp.UpSet(1)

    def le(self, a, b):
        return a <= b

    def lt(self, a, b):
        return a < b

    def is_proper(self, a):
        return a.is_proper

    def is_zero(self, a):
        return a.is_zero

    def product(self, a, b):
        return mp.minplus_arith("product", a, b)

    def meet(self, a, b):
        return mp.minplus_arith("intersection", a, b)

    def radical(self, a):
        return mp.minplus_arith("radical", a)

    def powers(self, a):
        """a, a^2, ... until the threshold passes K (or the chain stops moving)."""
        out = [a]
        while out[-1].threshold <= self.K:
            nxt = mp.minplus_arith("product", out[-1], a)
            if nxt == out[-1]:
                break
            out.append(nxt)
        return out

    def power_limit(self, a):
        # thresholds n*k grow without bound unless k = 0
        if a.tag == mp.WHOLE:
            return a
        return mp.Zero

    def is_prime(self, a):
        return mp.minplus_predicate("prime", a)

    def is_primary(self, a):
        return mp.minplus_predicate("primary", a)

    def is_two_absorbing(self, a):
        return mp.minplus_predicate("two_absorbing", a)

    def is_subtractive(self, a):
        return mp.minplus_predicate("subtractive", a)

    def is_divided_prime(self, p):
        return bool(mp.minplus_predicate("divided", p))

    def minimal_primes(self, a):
        over = [p for p in self.primes if a <= p]
        return [p for p in over if not any(q < p for q in over)]

    def minimal_two_absorbing(self, a):
        over = [q for q in self.two_absorbing if a <= q]
        return [q for q in over if not any(r < q for r in over)]

    def characterize_minimal_prime(self, a, p):
        """Same three conditions as the finite engine.

        Condition 2 in closed form: an MC-set containing a positive finite
        value contains all its multiples, so the only MC-set maximal among
        those avoiding UpSet(k) is {0}, and the one avoiding Zero is N.
        """
        cond1 = p in self.minimal_primes(a)
        complement_is_n = p.is_zero
        cond2 = complement_is_n == a.is_zero
        t = max(a.threshold if a.tag == mp.UPSET else 1, 1)
        reps = mp.representatives(3 * t + 1)
        cond3 = all(
            any(y + i * x in a for y in reps if y not in p for i in range(0, t + 1))
            for x in reps if x in p
        )
        return cond1, cond2, cond3

    @property
    def elements(self):
        return self._reps

    def elements_in(self, a):
        return [x for x in self._reps if x in a]

    def mul(self, x, y):
        return x + y

    def principal(self, x):
        return mp.principal_minplus(x)

    def show(self, a):
        return repr(a)

    def show_element(self, x):
        return "inf" if x == mp.INF else str(x)

    @cached_property
    def flags(self):
        f = dict(mp.minplus_classification(self.K)["flags"])
        f["ring"] = False
        f["primes_comparable"] = all(p <= q or q <= p for p, q in product(self.primes, repeat=2))
        f["field"] = False
        return f


def structure_for(obj):
    """Wrap a FiniteSemiring, a catalog model or an existing structure."""
    if isinstance(obj, (FiniteStructure, MinPlusStructure)):
        return obj
    if isinstance(obj, FiniteSemiring):
        return FiniteStructure(obj)
    if isinstance(obj, mp.MinPlusModel):
        return MinPlusStructure(obj.family_cap)
    if isinstance(obj, mp.FiniteModel):
        return FiniteStructure(obj.semiring, obj.name)
    raise TypeError(f"cannot build a structure from {type(obj).__name__}")
