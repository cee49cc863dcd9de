"""
Laplace expansion with q-complementary matrices
===============================================

Deleting row i and column j and multiplying the two off-blocks by mu gives
A_ij(mu).  Expanding along any row or column then reproduces P_mu(A), and
memoising the minors makes the cost grow like 2^n rather than n!.
"""

import time

from muperm import mu_permanent_laplace, mu_permanent_naive, q_complementary
from muperm.matrices import gen_rational

A = gen_rational(3, 1)
print("A_22(mu) entries:")
for row in q_complementary(A, 2, 2).entries:
    print("   ", [p.format() for p in row])

A = gen_rational(6, 4)
ref = mu_permanent_naive(A)
same = all(mu_permanent_laplace(A, axis, k) == ref for axis in ("row", "column") for k in range(1, 7))
print("all 12 expansions of a 6x6 agree with the permutation sum:", same)

# past the naive cap (n = 9 by default) the Laplace route still works
for n in (10, 11, 12):
    B = gen_rational(n, n)
    t = time.perf_counter()
    P = mu_permanent_laplace(B)
    print(f"n={n}: degree {P.degree}, {time.perf_counter() - t:.1f}s")
