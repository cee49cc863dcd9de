"""
The Schur power matrix
======================

Pi_mu(A) is the n! x n! matrix with entries prod a_{sigma(i) tau(i)} times
mu^inv(tau sigma^-1).  Its grand sum over n! is P_mu(A), and the kernel
Gamma_mu is positive semidefinite on [-1, 1].
"""

from fractions import Fraction

import numpy as np

from muperm import averaging_identity, check_gamma_psd, pi_mu
from muperm.matrices import gen_psd
from muperm.schur import jacobi_eigenvalues

A = gen_psd(4, seed=2)
p_mu, avg = averaging_identity(A)
print("P_mu(A)        =", p_mu)
print("grand sum / n! =", avg)

for n in (2, 3, 4):
    r = check_gamma_psd(n)
    print(f"Gamma_mu, n={n}: smallest eigenvalue on the grid {min(r.min_eigenvalues):.2e}")

# largest eigenvalue of Pi_mu(A) against P_mu(A)
M = pi_mu(A)
for mu in (Fraction(0), Fraction(1, 2), Fraction(1)):
    lam = jacobi_eigenvalues(M.to_numpy(float(mu)))[-1]
    print(f"mu={mu}: lambda_max={lam:.6f}  P_mu={float(p_mu.evaluate(mu).re):.6f}")
print("numpy agrees:", np.isclose(jacobi_eigenvalues(M.to_numpy(0.5))[-1], np.linalg.eigvalsh(M.to_numpy(0.5))[-1]))
