"""Counterexample search for two open questions.

q1 asks for a prime p whose square is not 2-absorbing.  q2 asks whether a
subtractive semiring with comparable primes and pm = p for every prime must
be 2-AB.  The scan at order 4 finds no q1 witness and a q2 witness.
"""

import sys
import tempfile

from semiring_ideals.enumeration import enumerate_semirings
from semiring_ideals.harness.search import search_counterexample, write_certificate
from semiring_ideals.models import builtin_models

instances = list(builtin_models().values()) + [S for n in (2, 3, 4) for S in enumerate_semirings(n)]

for q in ("q1", "q2"):
    report = search_counterexample(q, instances)
    sys.stdout.write(report.to_text())
    if report.found:
        path = write_certificate(report, tempfile.mkdtemp())
        print(path.read_text())
