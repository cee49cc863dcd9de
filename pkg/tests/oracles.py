"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

from muperm.algebra import GaussianRational, MuPoly


def inversions(perm) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def lehmer(perm) -> tuple[int, ...]:
    n = len(perm)
    return tuple(sum(1 for k in range(i + 1, n) if perm[k] < perm[i]) for i in range(n))


def _rows(A):
    return [[GaussianRational.coerce(x) for x in row] for row in (A.entries if hasattr(A, "entries") else A)]


def brute_mu_permanent(A) -> MuPoly:
    """Sum over itertools.permutations with an O(n^2) inversion count."""
    rows = _rows(A)
    n = len(rows)
    coeffs = [GaussianRational(0)] * (n * (n - 1) // 2 + 1)
    for perm in itertools.permutations(range(n)):
        term = GaussianRational(1)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        k = inversions(perm)
        coeffs[k] = coeffs[k] + term
    return MuPoly(coeffs)


def brute_qdet(A) -> dict[tuple[int, ...], GaussianRational]:
    """Exponent tuple (length n-1) -> coefficient, sign (-1)^{sum of exponents}."""
    rows = _rows(A)
    n = len(rows)
    out: dict[tuple[int, ...], GaussianRational] = {}
    for perm in itertools.permutations(range(n)):
        term = GaussianRational(1)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        code = lehmer(perm)[: max(n - 1, 0)]
        if sum(code) % 2:
            term = -term
        out[code] = out.get(code, GaussianRational(0)) + term
    return {k: v for k, v in out.items() if v}


def brute_permanent(A) -> GaussianRational:
    return brute_mu_permanent(A).evaluate(1)


def gauss_det(A) -> Fraction:
    """Plain Fraction Gaussian elimination with row swaps (real input)."""
    M = [[Fraction(x.re) if hasattr(x, "re") else Fraction(x) for x in row] for row in (A.entries if hasattr(A, "entries") else A)]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def brute_restricted(A, S) -> MuPoly:
    rows = _rows(A)
    n = len(rows)
    S0 = {s - 1 for s in S}
    coeffs = [GaussianRational(0)] * (n * (n - 1) // 2 + 1)
    for perm in itertools.permutations(range(n)):
        if {perm[i] for i in S0} != S0:
            continue
        term = GaussianRational(1)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        coeffs[inversions(perm)] += term
    return MuPoly(coeffs)
