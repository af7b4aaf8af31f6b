"""Betti elements, minimal presentations, and independent verification."""

import json

from numonoid import (
    NumericalMonoid,
    all_minimal_presentations,
    betti_elements,
    congruence_closure_check,
    minimal_presentation,
)

M = NumericalMonoid((6, 9, 20))

# Betti elements: the values whose factorization graph is disconnected
print("Betti elements:", betti_elements(M))

pres = minimal_presentation(M)
for r in pres.relations:
    print(f"at {r.betti}:  {r.left} ~ {r.right}")

# the canonical choice is one of several; the count is exact even when
# the enumeration is capped
count, items = all_minimal_presentations(M)
print("distinct minimal presentations:", count)
for p in items:
    print("  ", [(r.left, r.right) for r in p.relations])

# closure check: do these relations recover every equality of
# factorizations up to the window? (brute force, independent code path)
report = congruence_closure_check(M, pres.relations, 200)
print("closure up to 200:", "ok" if report.ok else report.failures[:1])

# the JSON shape used by the CLI round-trips through the verifier
print(json.dumps(pres.to_json_dict(), indent=2))
