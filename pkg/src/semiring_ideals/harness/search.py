"""Counterexample search for the two open questions.

q1: a prime p whose square p^2 is not 2-absorbing.
q2: a subtractive semiring with comparable primes and pm = p for every prime
    p that nevertheless has a 2-absorbing ideal that is not prime.

A report never claims more than "not found among the scanned instances".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..fileformat import semiring_to_json
from .structures import FiniteStructure, MinPlusStructure, structure_for

QUESTIONS = ("q1", "q2")


@dataclass
class SearchReport:
    question: str
    scanned: int = 0
    hypotheses_met: int = 0
    scope: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def found(self):
        return self.witness is not None

    def to_json(self):
        return {
            "question": self.question,
            "scanned": self.scanned,
            "hypotheses_met": self.hypotheses_met,
            "scope": self.scope,
            "result": "witness" if self.found else "not found",
            "witness": self.witness,
        }

    def to_text(self):
        head = f"{self.question}: scanned {self.scanned} instances ({', '.join(self.scope)}); " \
               f"{self.hypotheses_met} met the hypotheses"
        if not self.found:
            return head + "; no counterexample found in the scanned range\n"
        return head + "\nWITNESS " + json.dumps(self.witness, sort_keys=True) + "\n"


def _q1(st):
    for p in st.primes:
        p2 = st.product(p, p)
        c = st.is_two_absorbing(p2)
        if not c:
            return {
                "semiring": st.key, "instance": st.label,
                "prime": st.show(p), "p2": st.show(p2),
                "triple": [st.show_element(x) for x in c.witness],
            }
    return None


def _q2_hypotheses(st):
    f = st.flags
    if not (f["subtractive"] and f["primes_comparable"]):
        return False
    m = st.maximal_ideal
    return m is not None and all(st.product(p, m) == p for p in st.primes)


def _q2(st):
    for a in st.two_absorbing:
        c = st.is_prime(a)
        if not c:
            return {
                "semiring": st.key, "instance": st.label, "ideal": st.show(a),
                "prime_failure": None if c.witness is None else [st.show_element(x) for x in c.witness],
            }
    return None


def search_counterexample(question: str, instances) -> SearchReport:
    """Scan instances in the given order and stop at the first witness."""
    if question not in QUESTIONS:
        raise ValueError(f"unknown question {question!r}; choose q1 or q2")
    report = SearchReport(question)
    scope = set()
    for obj in instances:
        st = structure_for(obj)
        scope.add(st.instance_class)
        report.scanned += 1
        if question == "q1":
            report.hypotheses_met += 1 if st.primes else 0
            w = _q1(st)
        else:
            if not _q2_hypotheses(st):
                continue
            report.hypotheses_met += 1
            w = _q2(st)
        if w is not None:
            if isinstance(st, FiniteStructure):
                w["tables"] = semiring_to_json(st.S)
            report.witness = w
            break
    report.scope = sorted(scope)
    return report


def _q2_transcript(w):
    """Recompute every claim from the emitted tables alone."""
    from .. import ideals as ie
    from ..fileformat import semiring_from_json

    S = semiring_from_json(w["tables"])
    show = lambda a: "{" + ",".join(a.names()) + "}"
    ideals = ie.all_ideals(S)
    primes = ie.prime_ideals(S)
    m = ie.maximal_ideals(S)[0]
    lines = [
        "ideals: " + ", ".join(show(a) for a in ideals),
        "subtractive (every ideal): " + str(all(ie.is_subtractive_ideal(a) for a in ideals)),
        "primes: " + ", ".join(show(p) for p in primes),
        "primes comparable: " + str(all(p <= q or q <= p for p in primes for q in primes)),
        f"unique maximal ideal m = {show(m)}",
    ]
    lines += [f"p = {show(p)}: pm = {show(ie.ideal_product(p, m))}" for p in primes]
    a = next(x for x in ideals if show(x) == w["ideal"])
    x, y = (S.element_names.index(v) for v in w["prime_failure"])
    lines += [
        f"{show(a)} is 2-absorbing: {bool(ie.is_two_absorbing(a))}",
        f"{S.name(x)}*{S.name(y)} = {S.name(S.mul[x][y])} lies in {show(a)}, "
        f"but {S.name(x)} and {S.name(y)} do not, so {show(a)} is not prime",
    ]
    return lines


def write_certificate(report: SearchReport, directory) -> Path | None:
    """Emit the witness semiring as JSON plus a readable replay transcript."""
    if not report.found:
        return None
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    w = report.witness
    if "tables" in w:
        (d / f"{report.question}-{w['semiring']}.json").write_text(json.dumps(w["tables"], indent=1) + "\n")
    lines = [f"question: {report.question}", f"semiring: {w['semiring']} ({w['instance']})"]
    if report.question == "q1":
        x, y, z = w["triple"]
        lines += [
            f"prime p = {w['prime']}", f"p^2 = {w['p2']}",
            f"x*y*z in p^2 for (x, y, z) = ({x}, {y}, {z})",
            "but none of x*y, y*z, x*z lies in p^2",
        ]
    else:
        lines += _q2_transcript(w)
    path = d / f"{report.question}-{w['semiring']}.txt"
    path.write_text("\n".join(lines) + "\n")
    return path


__all__ = ["QUESTIONS", "SearchReport", "search_counterexample", "write_certificate", "MinPlusStructure"]
