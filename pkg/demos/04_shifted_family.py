"""The shifted-family shortcut: lift one presentation instead of recomputing.

M_n = <n, n+6, n+9, n+20>.  Past n = 400 the minimal presentations of
consecutive members (20 apart) match up relation-for-relation, so one
direct computation at a small base shift covers every larger shift in the
same residue class.
"""

import time

from numonoid import (
    ShiftedFamily,
    accelerated_minimal_presentation,
    clear_caches,
    lift_relation,
    minimal_presentation,
    monoid_at,
)

F = ShiftedFamily((6, 9, 20))
print("threshold:", F.threshold, " step:", F.step)

# how a single relation moves one step up the family: the longer side
# gains copies of the first atom, the shorter side copies of the last
rel = ((20, 5, 0, 0), (0, 0, 0, 24))
print("at n=450:", rel)
print("at n=470:", lift_relation(F, 450, rel))

# same answer both ways at a modest shift
n = 450
direct = minimal_presentation(monoid_at(F, n).monoid)
accel = accelerated_minimal_presentation(F, n)
assert direct.relations == accel.relations
print(f"n={n}: accelerated output matches the direct computation")

# at n = 10000 the direct Betti scan is hopeless, the lift is instant
clear_caches()
t0 = time.perf_counter()
pres = accelerated_minimal_presentation(F, 10000)
ms = (time.perf_counter() - t0) * 1000
print(f"n=10000: {len(pres.relations)} relations in {ms:.0f} ms")
print("Betti elements:", sorted(set(pres.betti_values())))
