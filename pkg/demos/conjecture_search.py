"""
Searching for counterexamples
=============================

Campaigns draw seeded random matrices and run exact checks.  Monotonicity
on [-1, 1] is certified by Sturm sequences on dP/dmu; the threshold for the
extended claim is the largest real root of dP/dmu.
"""

from muperm import check_monotone, epsilon_threshold, run_campaign
from muperm.matrices import SquareMatrix, generate

A = SquareMatrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
v = check_monotone(A)
print("J + I:", v.status, "derivative", v.details["derivative"])
print("threshold:", epsilon_threshold(A))  # None: derivative has no real root

B = generate("pd", 5, seed=7)
r = epsilon_threshold(B)
print("5x5 threshold interval:", None if r is None else (float(r.lo), float(r.hi)), r)

for claim in ("monotone", "epsilon", "fischer", "lieb"):
    res = run_campaign(claim, range(2, 6), trials=40, seed=1)
    print(f"{claim:9s} {res.status:15s} {res.counts}")
