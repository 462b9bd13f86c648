"""A three-element semiring that is 2-AB without being subtractive.

S = {0, u, 1} with 1 + u = u, 1 + 1 = 1 and u + u = u * u = u.
"""

from semiring_ideals import ideals as ie
from semiring_ideals.core import units
from semiring_ideals.harness import check_statement
from semiring_ideals.models import paper_three_element

S = paper_three_element().semiring
print("elements:", ", ".join(S.element_names))
print("units:", sorted(S.name(x) for x in units(S)))

print("\nideals and their properties:")
for a in ie.all_ideals(S):
    print(f"  {a!r:12} prime={bool(ie.is_prime(a))!s:5} maximal={ie.is_maximal(a)!s:5} "
          f"2-absorbing={bool(ie.is_two_absorbing(a))!s:5} subtractive={bool(ie.is_subtractive_ideal(a))}")

m = ie.all_ideals(S)[1]
c = ie.is_subtractive_ideal(m)
x, y = c.witness
print(f"\n{m!r} is not subtractive: {S.name(x)} + {S.name(y)} = {S.name(S.add[x][y])} lies in it, {S.name(y)} does not")

cls = ie.classify_semiring(S)
print("\nclassification:")
for k, v in cls.flags().items():
    print(f"  {k:14} {v}")

# statements whose hypotheses fail here are reported as vacuous
for sid in ("A1", "A7"):
    r = check_statement(S, sid)
    print(f"\n{sid}: {r.verdict} ({r.held} of {r.examined} instances met the hypotheses)")
