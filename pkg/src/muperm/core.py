"""The mu-permanent and the multivariable q-determinant.

Two independent routes to P_mu(A):

* :func:`mu_permanent_naive` sums over all permutations, skipping branches
  that hit a zero entry;
* :func:`mu_permanent_laplace` expands along a row or column using the
  (i, j)-q-complementary matrices, recursing on polynomial matrices.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .algebra import ZERO, GaussianRational, MuPoly, MultiQPoly, gr
from .matrices import Permutation, SquareMatrix, conjugate_by, inversion_count

DEFAULT_MAX_N = 9


class DimensionCapExceeded(ValueError):
    """Raised when a factorial-cost routine is asked for too large an n."""


def max_n() -> int:
    """Naive-expansion cap; ``MUPERM_MAX_N`` overrides the default of 9."""
    value = os.environ.get("MUPERM_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def _check_cap(n: int, cap: int | None) -> None:
    cap = max_n() if cap is None else cap
    if n > cap:
        raise DimensionCapExceeded(
            f"n = {n} exceeds the permutation-expansion cap {cap}; "
            "use a structured method or raise the cap"
        )


class PolyMatrix:
    """Square matrix whose entries are MuPoly values."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = tuple(tuple(MuPoly.coerce(x) for x in row) for row in rows)
        if any(len(row) != len(entries) for row in entries):
            raise ValueError("matrix is not square")
        self.entries = entries

    @classmethod
    def coerce(cls, A: "SquareMatrix | PolyMatrix") -> "PolyMatrix":
        if isinstance(A, PolyMatrix):
            return A
        return cls(A.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> MuPoly:
        return self.entries[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"PolyMatrix([{body}])"

    def evaluate(self, mu) -> SquareMatrix:
        return SquareMatrix([[p.evaluate(mu) for p in row] for row in self.entries])


# ---------------------------------------------------------------------------
# Naive expansion
#
# Rows are visited top to bottom and columns tried in increasing order, so
# permutations come out in lexicographic order.  Choosing column c in the
# current row adds #{already used columns > c} to the inversion count.  For
# scalar matrices every row is first scaled to Gaussian integers; P_mu is
# linear in each row, so the result is divided by the product of the scales.


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _integer_rows(A: SquareMatrix) -> tuple[list[list[tuple[int, object]]], int, bool]:
    """Nonzero entries of each row scaled to integers, the total scale, and
    whether all entries are real."""
    real = A.is_real()
    rows = []
    scale = 1
    for row in A.entries:
        d = 1
        for x in row:
            d = _lcm(d, x.re.denominator)
            d = _lcm(d, x.im.denominator)
        scale *= d
        nz = []
        for c, x in enumerate(row):
            if x:
                re = int(x.re * d)
                if real:
                    nz.append((c, re))
                else:
                    nz.append((c, (re, int(x.im * d))))
        rows.append(nz)
    return rows, scale, real


def _expand_real(rows, first: Sequence[tuple[int, int]] | None = None) -> list[int]:
    n = len(rows)
    acc = [0] * (n * (n - 1) // 2 + 1)

    def rec(i: int, mask: int, prod: int, inv: int) -> None:
        if i == n:
            acc[inv] += prod
            return
        for c, v in rows[i]:
            bit = 1 << c
            if mask & bit:
                continue
            rec(i + 1, mask | bit, prod * v, inv + (mask >> (c + 1)).bit_count())

    if first is None:
        rec(0, 0, 1, 0)
    else:
        for c, v in first:
            rec(1, 1 << c, v, 0)
    return acc


def _expand_complex(rows, first=None) -> list[tuple[int, int]]:
    n = len(rows)
    acc_re = [0] * (n * (n - 1) // 2 + 1)
    acc_im = [0] * (n * (n - 1) // 2 + 1)

    def rec(i: int, mask: int, pr: int, pi: int, inv: int) -> None:
        if i == n:
            acc_re[inv] += pr
            acc_im[inv] += pi
            return
        for c, (vr, vi) in rows[i]:
            bit = 1 << c
            if mask & bit:
                continue
            rec(i + 1, mask | bit, pr * vr - pi * vi, pr * vi + pi * vr, inv + (mask >> (c + 1)).bit_count())

    if first is None:
        rec(0, 0, 1, 0, 0)
    else:
        for c, (vr, vi) in first:
            rec(1, 1 << c, vr, vi, 0)
    return list(zip(acc_re, acc_im))


def _expand_block(args):
    rows, real, first = args
    return (_expand_real if real else _expand_complex)(rows, first)


def _expand_poly(M: PolyMatrix) -> MuPoly:
    n = M.n
    rows = [[(c, p) for c, p in enumerate(row) if p] for row in M.entries]
    acc: dict[int, MuPoly] = {}

    def rec(i: int, mask: int, prod: MuPoly, inv: int) -> None:
        if i == n:
            acc[inv] = acc[inv] + prod if inv in acc else prod
            return
        for c, p in rows[i]:
            bit = 1 << c
            if mask & bit:
                continue
            rec(i + 1, mask | bit, prod * p, inv + (mask >> (c + 1)).bit_count())

    rec(0, 0, MuPoly.constant(1), 0)
    return reduce(lambda s, kv: s + kv[1].shift(kv[0]), sorted(acc.items()), MuPoly())


def mu_permanent_naive(A: SquareMatrix | PolyMatrix, cap: int | None = None, jobs: int = 1) -> MuPoly:
    """P_mu(A) = sum over sigma of prod_i a_{i,sigma(i)} * mu**inv(sigma).

    ``jobs > 1`` splits the sum by the column chosen in the first row and
    adds the blocks in a fixed order, so the result does not depend on it.
    """
    _check_cap(A.n, cap)
    if isinstance(A, PolyMatrix):
        return _expand_poly(A)
    rows, scale, real = _integer_rows(A)
    if jobs > 1 and A.n > 1:
        blocks = [(rows, real, [entry]) for entry in rows[0]]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_expand_block, blocks))
        if real:
            acc = [sum(col) for col in zip(*parts)] if parts else [0]
        else:
            acc = [(sum(x[0] for x in col), sum(x[1] for x in col)) for col in zip(*parts)] if parts else [(0, 0)]
    else:
        acc = _expand_block((rows, real, None))
    if real:
        return MuPoly([GaussianRational(Fraction(v, scale)) for v in acc])
    return MuPoly([GaussianRational(Fraction(r, scale), Fraction(i, scale)) for r, i in acc])


# ---------------------------------------------------------------------------
# Laplace expansion


def q_complementary(A: SquareMatrix | PolyMatrix, i: int, j: int) -> PolyMatrix:
    """The (i, j)-q-complementary matrix A_ij(mu) (1-based indices).

    Row i and column j are deleted; surviving entries above row i and right of
    column j, or below row i and left of column j, are multiplied by mu.
    """
    n = A.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"({i}, {j}) outside a {n}x{n} matrix")
    M = PolyMatrix.coerce(A)
    rows = []
    for r in range(1, n + 1):
        if r == i:
            continue
        row = []
        for c in range(1, n + 1):
            if c == j:
                continue
            p = M.entries[r - 1][c - 1]
            if (r < i and c > j) or (r > i and c < j):
                p = p.shift(1)
            row.append(p)
        rows.append(row)
    return PolyMatrix(rows)


def _laplace_first_row(M: PolyMatrix, cache: dict) -> MuPoly:
    # Expanding repeatedly along the first row reaches the same minor for a
    # given set of deleted columns whatever the deletion order, so the
    # recursion visits at most 2^n distinct matrices.
    if M.n == 1:
        return M.entries[0][0]
    hit = cache.get(M)
    if hit is not None:
        return hit
    total = MuPoly()
    for j in range(1, M.n + 1):
        a = M.entries[0][j - 1]
        if a:
            total = total + a * _laplace_first_row(q_complementary(M, 1, j), cache)
    cache[M] = total
    return total


def mu_permanent_laplace(A: SquareMatrix | PolyMatrix, axis: str = "row", index: int = 1) -> MuPoly:
    """P_mu(A) = sum_j a_ij P_mu(A_ij(mu)) (row form) or sum_i (column form)."""
    if axis not in ("row", "column"):
        raise ValueError("axis must be 'row' or 'column'")
    M = PolyMatrix.coerce(A)
    n = M.n
    if not 1 <= index <= n:
        raise IndexError(f"{axis} {index} outside 1..{n}")
    if n == 1:
        return M.entries[0][0]
    cache: dict = {}
    total = MuPoly()
    for k in range(1, n + 1):
        i, j = (index, k) if axis == "row" else (k, index)
        a = M.entries[i - 1][j - 1]
        if a:
            total = total + a * _laplace_first_row(q_complementary(M, i, j), cache)
    return total


def bordered_matrix(A: SquareMatrix, i: int, j: int) -> SquareMatrix:
    """A with row i and column j zeroed and a 1 placed at (i, j)."""
    n = A.n
    return SquareMatrix(
        [
            [(1 if c == j else 0) if r == i else (0 if c == j else A.entry(r, c)) for c in range(1, n + 1)]
            for r in range(1, n + 1)
        ]
    )


# ---------------------------------------------------------------------------


def multivariable_qdet(A: SquareMatrix, cap: int | None = None) -> MultiQPoly:
    """sum over sigma of prod_i a_{i,sigma(i)} (-q_i)**l_i(sigma).

    l_i(sigma) = #{k > i : sigma(i) > sigma(k)}, which equals the number of
    columns below sigma(i) still unused when row i is placed.
    """
    n = A.n
    _check_cap(n, cap)
    nvars = max(n - 1, 0)
    rows = [[(c, x) for c, x in enumerate(row) if x] for row in A.entries]
    terms: dict[tuple[int, ...], GaussianRational] = {}
    code = [0] * n
    full = (1 << n) - 1

    def rec(i: int, mask: int, prod: GaussianRational) -> None:
        if i == n:
            key = tuple(code[:nvars])
            if sum(key) % 2:
                prod = -prod
            terms[key] = terms.get(key, ZERO) + prod
            return
        free = full & ~mask
        for c, x in rows[i]:
            bit = 1 << c
            if mask & bit:
                continue
            code[i] = (free & (bit - 1)).bit_count()
            rec(i + 1, mask | bit, prod * x)

    rec(0, 0, gr(1))
    return MultiQPoly(nvars, terms)


def specialize(A: SquareMatrix, mu, cap: int | None = None) -> GaussianRational:
    """P_mu(A) at a given exact mu."""
    cap_ = max_n() if cap is None else cap
    p = mu_permanent_naive(A, cap=cap_) if A.n <= cap_ else mu_permanent_laplace(A)
    return p.evaluate(mu)


def conjugated_mu_permanent(A: SquareMatrix, tau: Permutation, cap: int | None = None) -> MuPoly:
    """P_mu(P(tau)^{-1} A P(tau)), computed two ways and cross-checked.

    One side expands the explicitly conjugated matrix; the other re-weights
    each term of A by mu**inv(tau sigma tau^{-1}).
    """
    n = A.n
    if tau.n != n:
        raise ValueError("dimension mismatch")
    _check_cap(n, cap)
    direct = mu_permanent_naive(A.permutation_similar(tau), cap=cap)

    rows = [[(c, x) for c, x in enumerate(row) if x] for row in A.entries]
    acc: dict[int, GaussianRational] = {}
    images = [0] * n

    def rec(i: int, mask: int, prod: GaussianRational) -> None:
        if i == n:
            k = inversion_count(conjugate_by(tau, Permutation(tuple(images))))
            acc[k] = acc.get(k, ZERO) + prod
            return
        for c, x in rows[i]:
            if mask >> c & 1:
                continue
            images[i] = c + 1
            rec(i + 1, mask | (1 << c), prod * x)

    rec(0, 0, gr(1))
    reweighted = MuPoly()
    for k, c in acc.items():
        reweighted = reweighted + MuPoly.monomial(c, k)
    assert direct == reweighted, "conjugation identity failed: implementation bug"
    return direct
