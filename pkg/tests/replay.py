"""Replay witnesses from their tables alone.

Ideals in witnesses are rendered as "{0,a}"; they are resolved back to member
sets here and every claim is recomputed with the brute-force oracles.
"""

import oracles


def resolve(S, text):
    names = text.strip("{}").split(",")
    return frozenset(S.element_names.index(n) for n in names)


def product_ideal(S, A, B):
    gens = {S.mul[a][b] for a in A for b in B}
    return min((I for I in oracles.ideals_of(S.add, S.mul) if gens <= I), key=len)


def principal(S, x):
    return min((I for I in oracles.ideals_of(S.add, S.mul) if x in I), key=len)


def flags_from_tables(S):
    n, ideals = S.order, oracles.ideals_of(S.add, S.mul)
    primes = [I for I in ideals if oracles.is_prime(I, S.mul, n)]
    two_abs = [I for I in ideals if oracles.is_two_absorbing(I, S.mul, n)]
    proper = [I for I in ideals if len(I) < n]
    maximal = [I for I in proper if not any(I < J for J in proper)]
    return {
        "subtractive": all(oracles.is_subtractive(I, S.add, n) for I in ideals),
        "two_ab": all(I in primes for I in two_abs),
        "primes_comparable": all(P <= Q or Q <= P for P in primes for Q in primes),
        "local": len(maximal) == 1,
        "primes": primes, "two_absorbing": two_abs, "maximal": maximal,
    }


def replay_violation(S, statement, witness):
    """True when the witness reproduces the failed conclusion.

    Hypotheses are not re-checked: these witnesses come from runs with the
    semiring-level hypotheses dropped.
    """
    n = S.order
    w = witness
    if statement == "B5":
        P, P2 = resolve(S, w["p"]), resolve(S, w["p2"])
        return (oracles.is_prime(P, S.mul, n) and P2 == product_ideal(S, P, P)
                and P2 != P and oracles.is_two_absorbing(P2, S.mul, n))
    if statement == "V1":
        A, L = resolve(S, w["a"]), resolve(S, w["limit"])
        cur = A
        for _ in range(n + 1):
            cur = product_ideal(S, cur, A)
        return cur == L and not oracles.is_prime(L, S.mul, n)
    if statement == "V6":
        Q, x, QX = resolve(S, w["q"]), S.element_names.index(w["x"]), resolve(S, w["qx"])
        return x not in Q and QX == product_ideal(S, Q, principal(S, x)) and QX != Q
    if statement == "B2":
        f = flags_from_tables(S)
        return (f["primes_comparable"], f["local"]) == (w["primes_comparable"], w["local"]) \
            and not (w["primes_comparable"] and w["local"])
    if statement == "B6":
        f = flags_from_tables(S)
        idem = all(product_ideal(S, P, P) == P for P in f["primes"])
        return f["two_ab"] == w["two_ab"] and idem == w["all_primes_idempotent"] and w["two_ab"] != idem
    if statement == "V4":
        P = resolve(S, w["p"])
        return oracles.is_prime(P, S.mul, n) and any(
            x not in P and not P < principal(S, x) for x in S.elements)
    raise KeyError(statement)


REPLAYABLE = ("B5", "V1", "V6", "B2", "B6", "V4")
