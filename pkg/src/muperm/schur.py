"""Schur power matrix, the inversion kernel Gamma_mu, and their Hadamard product.

Rows and columns of every n! x n! matrix here are indexed by S_n in
lexicographic order; :func:`perm_rank` / :func:`perm_unrank` convert
between a permutation and its index via the factorial number system.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import ZERO, GaussianRational, MuPoly, gr
from .core import mu_permanent_naive
from .matrices import SquareMatrix, inversion_count

SCHUR_CAP = 6
HARD_CAP = 7


class SchurCapExceeded(ValueError):
    pass


def _check(n: int, cap: int) -> None:
    if cap > HARD_CAP:
        raise ValueError(f"cap may not exceed {HARD_CAP}")
    if n > cap:
        raise SchurCapExceeded(f"n = {n} exceeds the n! x n! construction cap {cap}")


def perm_rank(sigma: Sequence[int]) -> int:
    """Lexicographic rank (0-based) of a 1-based image tuple."""
    n = len(sigma)
    rank = 0
    for i, s in enumerate(sigma):
        smaller = sum(1 for t in sigma[i + 1:] if t < s)
        rank += smaller * math.factorial(n - 1 - i)
    return rank


def perm_unrank(rank: int, n: int) -> tuple[int, ...]:
    pool = list(range(1, n + 1))
    out = []
    for i in range(n):
        f = math.factorial(n - 1 - i)
        k, rank = divmod(rank, f)
        out.append(pool.pop(k))
    return tuple(out)


def lex_permutations(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(1, n + 1)))


@dataclass
class PermIndexedMatrix:
    """n! x n! matrix indexed by permutations in lexicographic order.

    ``entries`` holds GaussianRational or MuPoly values.
    """

    n: int
    perms: list[tuple[int, ...]]
    entries: list[list]

    @property
    def size(self) -> int:
        return len(self.perms)

    def __getitem__(self, key):
        s, t = key
        if isinstance(s, tuple):
            s = perm_rank(s)
        if isinstance(t, tuple):
            t = perm_rank(t)
        return self.entries[s][t]

    def evaluate(self, mu) -> "PermIndexedMatrix":
        """Exact specialisation of polynomial entries at ``mu``."""
        mu = gr(mu)
        return PermIndexedMatrix(
            self.n, self.perms, [[_eval_entry(x, mu) for x in row] for row in self.entries]
        )

    def to_numpy(self, mu: float | None = None) -> np.ndarray:
        """Real float array; polynomial entries are evaluated at float ``mu``."""
        out = np.empty((self.size, self.size))
        for r, row in enumerate(self.entries):
            for c, x in enumerate(row):
                if isinstance(x, MuPoly):
                    if mu is None:
                        raise ValueError("polynomial entries need a value of mu")
                    val = 0.0
                    for coef in reversed(x.coeffs):
                        val = val * mu + _real_float(coef)
                    out[r, c] = val
                else:
                    out[r, c] = _real_float(x)
        return out

    def grand_sum(self):
        if self.entries and isinstance(self.entries[0][0], MuPoly):
            acc: dict[int, GaussianRational] = {}
            for row in self.entries:
                for p in row:
                    for k, c in enumerate(p.coeffs):
                        if c:
                            acc[k] = acc.get(k, ZERO) + c
            out = MuPoly()
            for k, c in acc.items():
                out = out + MuPoly.monomial(c, k)
            return out
        acc = ZERO
        for row in self.entries:
            for x in row:
                acc = acc + x
        return acc

    def row_sums(self) -> list:
        out = []
        for row in self.entries:
            s = MuPoly() if isinstance(row[0], MuPoly) else ZERO
            for x in row:
                s = s + x
            out.append(s)
        return out


def _eval_entry(x, mu):
    return x.evaluate(mu) if isinstance(x, MuPoly) else x


def _real_float(x: GaussianRational) -> float:
    if x.im:
        raise ValueError("spectral routines handle real matrices only")
    return float(x.re)


def _scaled_rows(A: SquareMatrix) -> tuple[list[list[tuple[int, int]]], int]:
    rows, scale = [], 1
    for row in A.entries:
        d = 1
        for x in row:
            d = math.lcm(d, x.re.denominator, x.im.denominator)
        scale *= d
        rows.append([(int(x.re * d), int(x.im * d)) for x in row])
    return rows, scale


def _schur_entries(A: SquareMatrix, perms) -> list[list[GaussianRational]]:
    # Each row index sigma(i) occurs once in the product, so scaling row r of
    # A by d_r scales every entry by the same prod(d_r).
    rows, scale = _scaled_rows(A)
    real = A.is_real()
    out = []
    for s in perms:
        srows = [rows[si - 1] for si in s]
        line = []
        for t in perms:
            if real:
                p = 1
                for row, ti in zip(srows, t):
                    p *= row[ti - 1][0]
                    if not p:
                        break
                line.append(GaussianRational(Fraction(p, scale)))
            else:
                pr, pi = 1, 0
                for row, ti in zip(srows, t):
                    vr, vi = row[ti - 1]
                    pr, pi = pr * vr - pi * vi, pr * vi + pi * vr
                line.append(GaussianRational(Fraction(pr, scale), Fraction(pi, scale)))
        out.append(line)
    return out


def schur_power(A: SquareMatrix, cap: int = SCHUR_CAP) -> PermIndexedMatrix:
    """Pi(A) with (sigma, tau) entry prod_i a_{sigma(i), tau(i)}."""
    _check(A.n, cap)
    perms = lex_permutations(A.n)
    return PermIndexedMatrix(A.n, perms, _schur_entries(A, perms))


def gamma_exponents(n: int, cap: int = SCHUR_CAP) -> np.ndarray:
    """Integer matrix of inv(tau sigma^{-1})."""
    _check(n, cap)
    perms = lex_permutations(n)
    inverses = []
    for s in perms:
        inv = [0] * n
        for i, si in enumerate(s):
            inv[si - 1] = i + 1
        inverses.append(inv)
    E = np.zeros((len(perms), len(perms)), dtype=np.int64)
    for a, sinv in enumerate(inverses):
        for b, t in enumerate(perms):
            E[a, b] = inversion_count([t[x - 1] for x in sinv])
    return E


def gamma_mu(n: int, cap: int = SCHUR_CAP) -> PermIndexedMatrix:
    """Gamma_mu with (sigma, tau) entry mu**inv(tau sigma^{-1})."""
    E = gamma_exponents(n, cap)
    monos = [MuPoly.monomial(1, k) for k in range(n * (n - 1) // 2 + 1)]
    return PermIndexedMatrix(n, lex_permutations(n), [[monos[k] for k in row] for row in E.tolist()])


def gamma_float(n: int, mu: float, cap: int = SCHUR_CAP) -> np.ndarray:
    return float(mu) ** gamma_exponents(n, cap).astype(float)


def pi_mu(A: SquareMatrix, cap: int = SCHUR_CAP) -> PermIndexedMatrix:
    """Hadamard product Pi(A) o Gamma_mu."""
    _check(A.n, cap)
    perms = lex_permutations(A.n)
    S = _schur_entries(A, perms)
    E = gamma_exponents(A.n, cap).tolist()
    return PermIndexedMatrix(
        A.n, perms, [[MuPoly.monomial(x, k) for x, k in zip(srow, erow)] for srow, erow in zip(S, E)]
    )


def averaging_identity(A: SquareMatrix, cap: int = SCHUR_CAP) -> tuple[MuPoly, MuPoly]:
    """(P_mu(A), grand sum of Pi_mu(A) / n!), asserted equal."""
    lhs = mu_permanent_naive(A)
    rhs = pi_mu(A, cap).grand_sum() * Fraction(1, math.factorial(A.n))
    assert lhs == rhs, "averaging identity failed: implementation bug"
    return lhs, rhs


# ---------------------------------------------------------------------------
# Cyclic Jacobi eigenvalues.  Each sweep runs n-1 rounds of a round-robin
# tournament; the n/2 rotations of a round act on disjoint index pairs, so
# they commute and are applied together with vectorised row/column updates.


def float_sym(M) -> np.ndarray:
    """Copy of ``M`` as a float array, made exactly symmetric from its upper triangle."""
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    upper = np.triu(A)
    return upper + np.triu(A, 1).T


def _round_robin(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[k], players[m - 1 - k]) for k in range(m // 2)]
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


@functools.lru_cache(maxsize=None)
def _schedule(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    out = []
    for pairs in _round_robin(n + (n % 2)):
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a < n and b < n]
        out.append((np.array([a for a, _ in pairs]), np.array([b for _, b in pairs])))
    return out


def _off_norm(A: np.ndarray) -> float:
    # summed directly; subtracting the diagonal from the full norm cancels badly
    off = A - np.diag(np.diag(A))
    return float(np.linalg.norm(off))


def _jacobi(M, tol: float, max_sweeps: int, vectors: bool):
    A = float_sym(M)
    n = A.shape[0]
    V = np.eye(n) if vectors else None
    fro = np.linalg.norm(A)
    if n == 1 or fro == 0.0:
        return np.diag(A).copy(), V
    schedule = _schedule(n)
    for _ in range(max_sweeps):
        if _off_norm(A) <= tol * fro:
            break
        for p, q in schedule:
            apq = A[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            # smaller root of t^2 + 2 t cot(2 phi) - 1 = 0, written to avoid
            # overflow when apq is tiny
            diff = A[q, q] - A[p, p]
            sd = np.where(diff >= 0.0, 1.0, -1.0)
            t = 2.0 * apq * sd / (np.abs(diff) + np.hypot(diff, 2.0 * apq))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = A[p, :].copy(), A[q, :].copy()
            A[p, :] = c[:, None] * rp - s[:, None] * rq
            A[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = A[:, p].copy(), A[:, q].copy()
            A[:, p] = cp * c - cq * s
            A[:, q] = cp * s + cq * c
            A[p, q] = 0.0
            A[q, p] = 0.0
            if V is not None:
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = vp * c - vq * s
                V[:, q] = vp * s + vq * c
    else:
        if _off_norm(A) > tol * fro:
            raise RuntimeError("Jacobi iteration did not converge")
    return np.diag(A).copy(), V


def jacobi_eigenvalues(M, tol: float = 1e-12, max_sweeps: int = 60) -> np.ndarray:
    """All eigenvalues (ascending) of a real symmetric matrix.

    Stops once the off-diagonal Frobenius norm is below ``tol`` times the
    norm of the input.
    """
    w, _ = _jacobi(M, tol, max_sweeps, vectors=False)
    return np.sort(w)


def jacobi_eigh(M, tol: float = 1e-12, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching eigenvectors (columns)."""
    w, V = _jacobi(M, tol, max_sweeps, vectors=True)
    order = np.argsort(w)
    return w[order], V[:, order]


def min_eigenvalue(M) -> float:
    return float(jacobi_eigenvalues(M)[0])


def max_eigenvalue(M) -> float:
    return float(jacobi_eigenvalues(M)[-1])


PSD_TOL = 1e-9


@dataclass
class GammaPSDReport:
    n: int
    mus: list[Fraction]
    min_eigenvalues: list[float]
    passed: bool


def uniform_grid(lo, hi, points: int) -> list[Fraction]:
    lo, hi = Fraction(lo), Fraction(hi)
    if points == 1:
        return [lo]
    return [lo + (hi - lo) * k / (points - 1) for k in range(points)]


def check_gamma_psd(n: int, mu_grid: Sequence | None = None, cap: int = 5) -> GammaPSDReport:
    """Minimum eigenvalue of Gamma_mu at each grid point in [-1, 1]."""
    if n > cap:
        raise SchurCapExceeded(f"n = {n} exceeds the spectral sweep cap {cap}")
    grid = [Fraction(m) for m in (mu_grid if mu_grid is not None else uniform_grid(-1, 1, 21))]
    E = gamma_exponents(n).astype(float)
    mins = []
    for mu in grid:
        G = np.ones_like(E) if mu == 1 else float(mu) ** E
        mins.append(min_eigenvalue(G))
    return GammaPSDReport(n, grid, mins, all(m >= -PSD_TOL for m in mins))
