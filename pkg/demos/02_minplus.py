"""The min-plus semiring: N with infinity, min as addition and + as multiplication.

Its ideals are Zero = {inf}, UpSet(k) = [k, inf] and the whole carrier.  The
2-absorbing ideals are p = UpSet(1) and p^2 = UpSet(2), and p^2 is not prime,
so the semiring is not 2-AB.
"""

from semiring_ideals.harness import MinPlusStructure, check_statement
from semiring_ideals.models import UpSet, minplus_arith, minplus_classification, minplus_ideal_family, minplus_predicate

p = UpSet(1)
print("p =", p, " p^2 =", minplus_arith("product", p, p), " rad(UpSet(3)) =", minplus_arith("radical", UpSet(3)))

print("\nideal          prime  primary  2-absorbing")
for a in minplus_ideal_family(5):
    print(f"{a!r:14} {bool(minplus_predicate('prime', a))!s:6} {bool(minplus_predicate('primary', a))!s:8} "
          f"{bool(minplus_predicate('two_absorbing', a))}")

c = minplus_predicate("two_absorbing", UpSet(3))
print("\nUpSet(3) fails 2-absorption at", c.witness, ": 1+1+1 = 3 is in it, every pair sum 2 is not")

print("\nflags:", minplus_classification()["flags"])

st = MinPlusStructure()
for sid in ("A11", "B6"):
    r = check_statement(st, sid)
    print(f"{sid}: {r.verdict} on {', '.join(r.checked)}")
