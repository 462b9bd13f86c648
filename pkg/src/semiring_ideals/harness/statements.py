"""Registry of checkable statements about ideals of commutative semirings.

Each checker is a generator over the instances of its quantifier.  It yields
``(instance, hypothesis_ok, conclusion)`` where ``conclusion`` is a thunk
returning ``None`` when the statement holds on that instance or a witness
dict when it does not.  Semiring-level hypotheses are listed on the
statement and applied by the runner, so a checker never assumes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable


@dataclass(frozen=True)
class Statement:
    id: str
    anchor: str
    claim: str
    hypotheses: tuple
    checker: Callable

    @property
    def family(self):
        return self.id[0]


REGISTRY: dict = {}


def statement(id, anchor, claim, hypotheses=()):
    def register(fn):
        REGISTRY[id] = Statement(id, anchor, claim, tuple(hypotheses), fn)
        return fn
    return register


def _fail(**kw):
    return kw


def _elts(st, w):
    return None if w is None else [st.show_element(x) for x in w]


def _sq(st, a):
    return st.product(a, a)


def _pm_condition(st):
    """Every minimal prime p over a 2-absorbing a satisfies a*m = p (None if it holds)."""
    m = st.maximal_ideal
    if m is None:
        return {"reason": "no unique maximal ideal"}
    for a in st.two_absorbing:
        am = st.product(a, m)
        for p in st.minimal_primes(a):
            if am != p:
                return {"a": st.show(a), "p": st.show(p), "am": st.show(am)}
    return None


def _two_min_condition(st):
    """2-Min(p^2) = {p} for every prime p (None if it holds)."""
    for p in st.primes:
        got = st.minimal_two_absorbing(_sq(st, p))
        if got != [p]:
            return {"p": st.show(p), "2-Min(p^2)": [st.show(q) for q in got]}
    return None


# -- valuation semirings -----------------------------------------------------

@statement("V1", "idealsofvaluation1 (1)", "the intersection of all powers of a proper ideal is prime", ["valuation"])
def _v1(st):
    for a in st.proper_ideals:
        def concl(a=a):
            c = st.power_limit(a)
            return None if st.is_prime(c) else _fail(a=st.show(a), limit=st.show(c))
        yield st.show(a), True, concl


@statement("V2", "idealsofvaluation1 (2)", "a strictly inside rad(b) implies b contains a power of a", ["valuation"])
def _v2(st):
    for a in st.proper_ideals:
        for b in st.ideals:
            def concl(a=a, b=b):
                if any(st.le(q, b) for q in st.powers(a)):
                    return None
                return _fail(a=st.show(a), b=st.show(b))
            yield f"a={st.show(a)} b={st.show(b)}", st.lt(a, st.radical(b)), concl


def _primaries_of(st, p):
    return [q for q in st.proper_ideals if st.is_primary(q) and st.radical(q) == p]


@statement("V3", "idealsofvaluation2 (2)",
           "products of p-primary ideals are p-primary; if p != p^2 every p-primary ideal is a power of p",
           ["valuation"])
def _v3(st):
    for p in st.primes:
        def concl(p=p):
            prim = _primaries_of(st, p)
            for q1, q2 in combinations_with_replacement(prim, 2):
                q = st.product(q1, q2)
                if not (st.is_primary(q) and st.radical(q) == p):
                    return _fail(p=st.show(p), q1=st.show(q1), q2=st.show(q2), product=st.show(q))
            if _sq(st, p) != p:
                pw = st.powers(p)
                for q in prim:
                    if q not in pw:
                        return _fail(p=st.show(p), q=st.show(q), reason="p-primary but not a power of p")
            return None
        yield st.show(p), True, concl


@statement("V6", "idealsofvaluation2 (1)", "q = q(x) for p-primary q and x outside p", ["valuation"])
def _v6(st):
    for p in st.primes:
        for q in _primaries_of(st, p):
            for x in st.elements:
                if x in p:
                    continue
                def concl(q=q, x=x):
                    qx = st.product(q, st.principal(x))
                    return None if qx == q else _fail(q=st.show(q), x=st.show_element(x), qx=st.show(qx))
                yield f"q={st.show(q)} x={st.show_element(x)}", True, concl


@statement("V4", "valuationisdivided", "every prime of a valuation semiring is divided", ["valuation"])
def _v4(st):
    for p in st.primes:
        yield st.show(p), True, (lambda p=p: None if st.is_divided_prime(p) else _fail(p=st.show(p)))


@statement("V5", "divided semirings (proposition after valuationisdivided)",
           "in a divided semiring every ideal is comparable with every prime, primes are comparable, S is local",
           ["divided"])
def _v5(st):
    for a in st.ideals:
        for p in st.primes:
            def concl(a=a, p=p):
                if st.le(a, p) or st.le(p, a):
                    return None
                return _fail(a=st.show(a), p=st.show(p))
            yield f"a={st.show(a)} p={st.show(p)}", True, concl
    yield "local", True, lambda: None if st.flags["local"] else _fail(maximal=[st.show(m) for m in st.maximal])


# -- 2-absorbing ideals ------------------------------------------------------

@statement("A1", "2-absorbingintersection", "p1 meet p2 is 2-absorbing for primes p1, p2")
def _a1(st):
    for p1, p2 in combinations_with_replacement(st.primes, 2):
        def concl(p1=p1, p2=p2):
            c = st.is_two_absorbing(st.meet(p1, p2))
            return None if c else _fail(p1=st.show(p1), p2=st.show(p2), triple=_elts(st, c.witness))
        yield f"{st.show(p1)} & {st.show(p2)}", True, concl


@statement("A2", "2-absorbingradical", "rad(a) is 2-absorbing and s^2 lies in a for s in rad(a), a 2-absorbing")
def _a2(st):
    for a in st.two_absorbing:
        def concl(a=a):
            r = st.radical(a)
            c = st.is_two_absorbing(r)
            if not c:
                return _fail(a=st.show(a), radical=st.show(r), triple=_elts(st, c.witness))
            for s in st.elements_in(r):
                if st.mul(s, s) not in a:
                    return _fail(a=st.show(a), s=st.show_element(s))
            return None
        yield st.show(a), True, concl


@statement("A3", "2-absorbingmulti", "in a local semiring pm is 2-absorbing, and prime exactly when pm = p", ["local"])
def _a3(st):
    m = st.maximal_ideal
    for p in st.primes:
        def concl(p=p):
            pm = st.product(p, m)
            c = st.is_two_absorbing(pm)
            if not c:
                return _fail(p=st.show(p), pm=st.show(pm), triple=_elts(st, c.witness))
            if bool(st.is_prime(pm)) != (pm == p):
                return _fail(p=st.show(p), pm=st.show(pm), reason="primality of pm disagrees with pm = p")
            return None
        yield st.show(p), m is not None, concl


@statement("A4", "minimalprimehuckaba",
           "for prime p over a: minimal over a <=> complement is a maximal MC-set avoiding a <=> each x in p has y*x^i in a")
def _a4(st):
    for p in st.primes:
        for a in st.ideals:
            if not st.le(a, p):
                continue
            def concl(a=a, p=p):
                c = st.characterize_minimal_prime(a, p)
                return None if len(set(c)) == 1 else _fail(a=st.show(a), p=st.show(p), conditions=list(c))
            yield f"a={st.show(a)} p={st.show(p)}", True, concl


@statement("A5", "minimalprimeover2-ab", "|Min(a)| <= 2 for 2-absorbing a whose minimal primes are all subtractive")
def _a5(st):
    for a in st.two_absorbing:
        mins = st.minimal_primes(a)
        hyp = all(st.is_subtractive(p) for p in mins)
        yield st.show(a), hyp, (lambda a=a, mins=mins: None if len(mins) <= 2
                                else _fail(a=st.show(a), minimal_primes=[st.show(p) for p in mins]))


@statement("A6", "weak Gaussian corollary", "|Min(a)| <= 2 for 2-absorbing a in a weak Gaussian semiring",
           ["weak_gaussian"])
def _a6(st):
    for a in st.two_absorbing:
        def concl(a=a):
            mins = st.minimal_primes(a)
            return None if len(mins) <= 2 else _fail(a=st.show(a), minimal_primes=[st.show(p) for p in mins])
        yield st.show(a), True, concl


@statement("A7", "p2subsetofideal",
           "2-absorbing a: rad(a)=p prime with p^2 in a, or rad(a)=p1 meet p2 with p1p2 and rad(a)^2 in a, Min(a)={p1,p2}",
           ["subtractive"])
def _a7(st):
    for a in st.two_absorbing:
        def concl(a=a):
            r = st.radical(a)
            r2_in = st.le(_sq(st, r), a)
            if st.is_prime(r) and r2_in:
                return None
            mins = st.minimal_primes(a)
            if len(mins) == 2:
                p1, p2 = mins
                if r == st.meet(p1, p2) and st.le(st.product(p1, p2), a) and r2_in:
                    return None
            return _fail(a=st.show(a), radical=st.show(r), minimal_primes=[st.show(p) for p in mins])
        yield st.show(a), True, concl


@statement("A8", "m2twoabsorbing", "p-primary a is 2-absorbing iff p^2 is in a; m^2 is 2-absorbing for maximal m",
           ["subtractive"])
def _a8(st):
    for a in st.proper_ideals:
        if not st.is_primary(a):
            continue
        def concl(a=a):
            p = st.radical(a)
            lhs, rhs = bool(st.is_two_absorbing(a)), st.le(_sq(st, p), a)
            return None if lhs == rhs else _fail(a=st.show(a), p=st.show(p), two_absorbing=lhs, p2_in_a=rhs)
        yield f"primary {st.show(a)}", True, concl
    for m in st.maximal:
        def concl(m=m):
            c = st.is_two_absorbing(_sq(st, m))
            return None if c else _fail(m=st.show(m), m2=st.show(_sq(st, m)), triple=_elts(st, c.witness))
        yield f"maximal {st.show(m)}", True, concl


def _nonzero_divided_primes(st):
    return [p for p in st.primes if not st.is_zero(p) and st.is_divided_prime(p)]


@statement("A9", "dividedprimeThm1",
           "p nonzero divided prime, rad(a)=p: a 2-absorbing iff a p-primary with p^2 in a", ["subtractive"])
def _a9(st):
    for p in _nonzero_divided_primes(st):
        for a in st.ideals:
            if st.radical(a) != p:
                continue
            def concl(a=a, p=p):
                lhs = bool(st.is_two_absorbing(a))
                rhs = bool(st.is_primary(a)) and st.le(_sq(st, p), a)
                return None if lhs == rhs else _fail(a=st.show(a), p=st.show(p), two_absorbing=lhs, primary_p2=rhs)
            yield f"a={st.show(a)} p={st.show(p)}", True, concl


@statement("A10", "dividedprimeThm2", "p^2 is 2-absorbing for a nonzero divided prime p", ["subtractive", "semidomain"])
def _a10(st):
    for p in _nonzero_divided_primes(st):
        def concl(p=p):
            c = st.is_two_absorbing(_sq(st, p))
            return None if c else _fail(p=st.show(p), p2=st.show(_sq(st, p)), triple=_elts(st, c.witness))
        yield st.show(p), True, concl


@statement("A11", "2-absorbing (valuation theorem)",
           "nonzero proper a: 2-absorbing <=> p-primary with p^2 in a <=> a = p or a = p^2, p = rad(a) prime",
           ["subtractive", "valuation"])
def _a11(st):
    for a in st.proper_ideals:
        def concl(a=a):
            p = st.radical(a)
            p_prime = bool(st.is_prime(p))
            c1 = bool(st.is_two_absorbing(a))
            c2 = bool(st.is_primary(a)) and p_prime and st.le(_sq(st, p), a)
            c3 = p_prime and (a == p or a == _sq(st, p))
            return None if c1 == c2 == c3 else _fail(a=st.show(a), conditions=[c1, c2, c3])
        yield st.show(a), not st.is_zero(a), concl


# -- 2-AB semirings ----------------------------------------------------------

def _two_ab_equivalence(st):
    s1 = _pm_condition(st) is None
    s2 = _two_min_condition(st) is None
    if s1 != s2:
        return _fail(pm_condition=s1, two_min_condition=s2)
    if s1 and not st.flags["two_ab"]:
        return _fail(reason="equivalent conditions hold but S is not 2-AB")
    return None


@statement("B1", "2minsemiring",
           "subtractive, primes comparable: (every minimal prime p over 2-absorbing a has am = p) <=> "
           "(2-Min(p^2) = {p} for all primes p), and either gives 2-AB",
           ["subtractive", "primes_comparable"])
def _b1(st):
    yield "semiring", True, lambda: _two_ab_equivalence(st)


@statement("B7", "2minsemiring corollary (divided semidomain)",
           "same equivalence and 2-AB consequence for a subtractive divided semidomain",
           ["subtractive", "divided", "semidomain"])
def _b7(st):
    yield "semiring", True, lambda: _two_ab_equivalence(st)


@statement("B2", "2-ABThm1 (1)", "in a 2-AB semiring primes are comparable and S is local", ["two_ab"])
def _b2(st):
    def concl():
        if st.flags["primes_comparable"] and st.flags["local"]:
            return None
        return _fail(primes_comparable=st.flags["primes_comparable"], local=st.flags["local"])
    yield "semiring", True, concl


@statement("B3", "2-ABThm1 (2)", "in a 2-AB semiring am = p for minimal primes over 2-absorbing a, and m^2 = m",
           ["two_ab"])
def _b3(st):
    def concl():
        bad = _pm_condition(st)
        if bad:
            return bad
        m = st.maximal_ideal
        return None if _sq(st, m) == m else _fail(m=st.show(m), m2=st.show(_sq(st, m)))
    yield "semiring", True, concl


@statement("B4", "2-ABThm2",
           "subtractive: 2-AB <=> (primes comparable and am = p condition) <=> (primes comparable and 2-Min(p^2) = {p})",
           ["subtractive"])
def _b4(st):
    def concl():
        comparable = st.flags["primes_comparable"]
        c1 = st.flags["two_ab"]
        c2 = comparable and _pm_condition(st) is None
        c3 = comparable and _two_min_condition(st) is None
        return None if c1 == c2 == c3 else _fail(conditions=[c1, c2, c3])
    yield "semiring", True, concl


@statement("B5", "not-2-absorbing", "subtractive 2-AB: for every prime p, p = p^2 or p^2 is not 2-absorbing",
           ["subtractive", "two_ab"])
def _b5(st):
    for p in st.primes:
        def concl(p=p):
            p2 = _sq(st, p)
            if p2 == p or not st.is_two_absorbing(p2):
                return None
            return _fail(p=st.show(p), p2=st.show(p2))
        yield st.show(p), True, concl


@statement("B6", "2-ABThm3", "subtractive valuation: 2-AB <=> p^2 = p for every prime p", ["subtractive", "valuation"])
def _b6(st):
    def concl():
        lhs = st.flags["two_ab"]
        rhs = all(_sq(st, p) == p for p in st.primes)
        return None if lhs == rhs else _fail(two_ab=lhs, all_primes_idempotent=rhs)
    yield "semiring", True, concl


@statement("R1", "remark on Noetherian 2-AB rings", "a finite 2-AB ring is a field", ["ring", "two_ab"])
def _r1(st):
    yield "semiring", True, lambda: None if st.flags["field"] else _fail(reason="2-AB ring with a nonzero non-unit")


OUT_OF_SCOPE = {
    "dividedprimeDef": "definition (implemented as a predicate)",
    "2-absorbingdef": "definition (implemented as a predicate)",
    "2-ABdef": "definition (implemented as a classification flag)",
    "2-MinDef": "definition (implemented as minimal_two_absorbing)",
    "question (p^2 not 2-absorbing)": "open question: counterexample search Q1",
    "question (pm = p sufficiency)": "open question: counterexample search Q2",
    "remark on Id(D) of a Dedekind domain": "not modelled: needs the ideal semiring of a Dedekind domain",
    "proof devices": "fractional/invertible ideals, localization, quotient semifield, polynomial content",
}


def statement_ids():
    order = {"V": 0, "A": 1, "B": 2, "R": 3}
    return sorted(REGISTRY, key=lambda s: (order[s[0]], int(s[1:])))
