"""Exhaustive generation of finite commutative semirings up to isomorphism.

Search runs in two stages.  Additive tables (0 is the identity) are filled
cell by cell over the upper triangle, rejecting any partial table with a
fully-determined associativity failure.  For each additive monoid the free
multiplication cells (rows 0 and 1 are forced by absorption and identity)
are filled the same way, pruning on associativity and distributivity.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path

from .core import CapacityError, FiniteSemiring, relabel

DEFAULT_MAX_ORDER = 5
HARD_MAX_ORDER = 6
GENERATOR_VERSION = "1"


@dataclass(frozen=True)
class CanonicalSemiring:
    semiring: FiniteSemiring
    canonical_key: bytes
    provenance: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def key_hex(self) -> str:
        return self.canonical_key.hex()

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.canonical_key).hexdigest()[:16]


@dataclass
class Corpus:
    orders: tuple
    entries: list
    counts: dict

    def semirings(self):
        return [e.semiring for e in self.entries]


def _encode(add, mul) -> bytes:
    n = len(add)
    return bytes([n] + [add[i][j] for i in range(n) for j in range(n)] + [mul[i][j] for i in range(n) for j in range(n)])


def _pinned_perms(n):
    for rest in permutations(range(2, n)):
        yield (0, 1) + rest


def canonical_form(S: FiniteSemiring) -> CanonicalSemiring:
    """Minimal table encoding over relabelings that fix zero and one."""
    best = None
    best_perm = None
    for perm in _pinned_perms(S.order):
        add, mul = relabel(S.add, S.mul, perm)
        key = _encode(add, mul)
        if best is None or key < best:
            best, best_perm = key, perm
    add, mul = relabel(S.add, S.mul, best_perm)
    names = [None] * S.order
    for old, new in enumerate(best_perm):
        names[new] = S.element_names[old]
    return CanonicalSemiring(FiniteSemiring(names, add, mul), best, {"order": S.order})


def canonical_key(S: FiniteSemiring) -> bytes:
    return canonical_form(S).canonical_key


def are_isomorphic(S1: FiniteSemiring, S2: FiniteSemiring) -> bool:
    return S1.order == S2.order and canonical_key(S1) == canonical_key(S2)


def _assoc_ok(t, n):
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if xy < 0:
                continue
            for z in range(n):
                yz = t[y][z]
                if yz < 0:
                    continue
                l, r = t[xy][z], t[x][yz]
                if l >= 0 and r >= 0 and l != r:
                    return False
    return True


def _distrib_ok(add, mul, n):
    for x in range(n):
        mx = mul[x]
        for y in range(n):
            xy = mx[y]
            if xy < 0:
                continue
            for z in range(y, n):
                xz, yz = mx[z], add[y][z]
                if xz < 0:
                    continue
                l = mx[yz]
                if l >= 0 and l != add[xy][xz]:
                    return False
    return True


def additive_monoids(n):
    """Labelled commutative monoids on range(n) with identity 0."""
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = x
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = t[j][i] = v
            if _assoc_ok(t, n):
                yield from fill(k + 1)
        t[i][j] = t[j][i] = -1

    yield from fill(0)


def multiplications(add):
    """Commutative multiplications with 1 as identity and 0 absorbing over ``add``."""
    n = len(add)
    m = [[-1] * n for _ in range(n)]
    for x in range(n):
        m[0][x] = m[x][0] = 0
    for x in range(1, n):
        m[1][x] = m[x][1] = x
    cells = [(i, j) for i in range(2, n) for j in range(i, n)]
    if not _distrib_ok(add, m, n):
        return

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in m)
            return
        i, j = cells[k]
        for v in range(n):
            m[i][j] = m[j][i] = v
            if _distrib_ok(add, m, n) and _assoc_ok(m, n):
                yield from fill(k + 1)
        m[i][j] = m[j][i] = -1

    yield from fill(0)


def _default_names(n):
    return ["0", "1"] + [chr(ord("a") + i) for i in range(n - 2)]


def _labelled(n):
    names = _default_names(n)
    for add in additive_monoids(n):
        for mul in multiplications(add):
            yield FiniteSemiring(names, add, mul)


def enumerate_semirings(n: int, up_to_iso: bool = True, max_order: int = DEFAULT_MAX_ORDER):
    """Yield every commutative semiring of order n.

    With ``up_to_iso`` one canonical representative per class is produced,
    sorted by canonical key; otherwise every labelling with zero at 0 and one
    at 1 is produced in search order.
    """
    if not 2 <= n <= min(max_order, HARD_MAX_ORDER):
        raise CapacityError(f"order {n} outside 2..{min(max_order, HARD_MAX_ORDER)}")
    if not up_to_iso:
        yield from _labelled(n)
        return
    classes = {}
    for S in _labelled(n):
        c = canonical_form(S)
        classes.setdefault(c.canonical_key, c.semiring)
    for key in sorted(classes):
        yield classes[key]


def build_corpus(orders, max_order: int = DEFAULT_MAX_ORDER) -> Corpus:
    entries, counts = [], {}
    for n in orders:
        found = [canonical_form(S) for S in enumerate_semirings(n, True, max_order)]
        for c in found:
            c.provenance.update({"generator": GENERATOR_VERSION, "up_to_iso": True})
        counts[n] = len(found)
        entries.extend(found)
    return Corpus(tuple(orders), entries, counts)


def save_corpus(corpus: Corpus, directory) -> Path:
    from .fileformat import semiring_to_json

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for c in corpus.entries:
        (d / f"{c.key_hex}.json").write_text(json.dumps(semiring_to_json(c.semiring), indent=1) + "\n")
    manifest = {
        "generator_version": GENERATOR_VERSION,
        "orders": list(corpus.orders),
        "counts": {str(k): v for k, v in corpus.counts.items()},
        "entries": [c.key_hex for c in corpus.entries],
    }
    (d / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return d


def load_corpus(directory) -> Corpus:
    from .fileformat import parse_semiring_file

    d = Path(directory)
    manifest = json.loads((d / "manifest.json").read_text())
    entries = []
    for key in manifest["entries"]:
        S = parse_semiring_file(d / f"{key}.json")
        c = canonical_form(S)
        if c.key_hex != key:
            raise ValueError(f"corpus file {key}.json does not match its canonical key")
        entries.append(c)
    counts = {int(k): v for k, v in manifest["counts"].items()}
    return Corpus(tuple(manifest["orders"]), entries, counts)
