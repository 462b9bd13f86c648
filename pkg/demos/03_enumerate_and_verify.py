"""Enumerate small semirings and check every registered statement on them."""

import time

from semiring_ideals.enumeration import enumerate_semirings
from semiring_ideals.harness import verify_corpus
from semiring_ideals.models import builtin_models

corpus = []
for n in (2, 3, 4):
    t0 = time.perf_counter()
    found = list(enumerate_semirings(n))
    print(f"order {n}: {len(found)} classes ({time.perf_counter() - t0:.2f}s)")
    corpus += found

report = verify_corpus(corpus + list(builtin_models().values()), workers=2)
print()
print(report.to_markdown())
