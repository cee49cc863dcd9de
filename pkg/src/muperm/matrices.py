"""Permutations, exact square matrices, support graphs and seeded generators.

All public interfaces use 1-based indices: a permutation of {1..n} is given
by its image tuple ``(sigma(1), ..., sigma(n))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .algebra import ONE, ZERO, GaussianRational, gr


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reverse(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``self * other`` = apply ``other`` first."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, s in enumerate(self.images):
            inv[s - 1] = i + 1
        return Permutation(tuple(inv))

    def inversion_count(self) -> int:
        return inversion_count(self)

    def inversion_table(self) -> tuple[int, ...]:
        return inversion_table(self)

    def matrix(self) -> "SquareMatrix":
        """The permutation matrix ``(delta_{i, sigma(i)})``."""
        n = self.n
        return SquareMatrix([[1 if j + 1 == self.images[i] else 0 for j in range(n)] for i in range(n)])


def _images(sigma) -> tuple[int, ...]:
    return sigma.images if isinstance(sigma, Permutation) else tuple(sigma)


def inversion_count(sigma: Permutation | Sequence[int]) -> int:
    """Number of pairs i < j with sigma(i) > sigma(j)."""
    s = _images(sigma)
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def inversion_table(sigma: Permutation | Sequence[int]) -> tuple[int, ...]:
    """``(l_1, ..., l_{n-1})`` with l_i = #{k > i : sigma(i) > sigma(k)}."""
    s = _images(sigma)
    n = len(s)
    return tuple(sum(1 for k in range(i + 1, n) if s[i] > s[k]) for i in range(n - 1))


def conjugate_by(tau: Permutation, sigma: Permutation) -> Permutation:
    """tau * sigma * tau^{-1}."""
    if tau.n != sigma.n:
        raise ValueError("dimension mismatch")
    return tau * sigma * tau.inverse()


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


# ---------------------------------------------------------------------------


class SquareMatrix:
    """Immutable n x n matrix of Gaussian rationals."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(gr(x) for x in row) for row in rows)
        n = len(entries)
        if n == 0:
            raise ValueError("empty matrix")
        if any(len(row) != n for row in entries):
            raise ValueError("matrix is not square")
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> "SquareMatrix":
        return cls([[1] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        """0-based element access ``A[i, j]``."""
        i, j = ij
        return self.entries[i][j]

    def entry(self, i: int, j: int) -> GaussianRational:
        """1-based element access a_{ij}."""
        return self.entries[i - 1][j - 1]

    def rows(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"SquareMatrix([{body}])"

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(zip(*self.entries))

    def conjugate(self) -> "SquareMatrix":
        return SquareMatrix([[x.conjugate() for x in row] for row in self.entries])

    def adjoint(self) -> "SquareMatrix":
        return self.transpose().conjugate()

    def is_real(self) -> bool:
        return all(x.im == 0 for row in self.entries for x in row)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i + 1, n))

    def is_hermitian(self) -> bool:
        n = self.n
        return all(self.entries[i][j] == self.entries[j][i].conjugate() for i in range(n) for j in range(i, n))

    def is_diagonal(self) -> bool:
        return not any(self.entries[i][j] for i in range(self.n) for j in range(self.n) if i != j)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out.append([_dot(row, col) for col in cols])
        return SquareMatrix(out)

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def scale(self, c) -> "SquareMatrix":
        c = gr(c)
        return SquareMatrix([[x * c for x in row] for row in self.entries])

    def with_row(self, i: int, row: Sequence) -> "SquareMatrix":
        """Copy with 1-based row ``i`` replaced."""
        rows = [list(r) for r in self.entries]
        rows[i - 1] = list(row)
        return SquareMatrix(rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SquareMatrix":
        """Submatrix on 1-based index lists."""
        return SquareMatrix([[self.entries[i - 1][j - 1] for j in cols] for i in rows])

    def principal(self, idx: Sequence[int]) -> "SquareMatrix":
        return self.submatrix(idx, idx)

    def permutation_similar(self, tau: Permutation) -> "SquareMatrix":
        """P(tau)^{-1} A P(tau), i.e. B[i][j] = A[tau^{-1}(i)][tau^{-1}(j)]."""
        inv = tau.inverse().images
        n = self.n
        return SquareMatrix([[self.entries[inv[i] - 1][inv[j] - 1] for j in range(n)] for i in range(n)])

    def to_float(self) -> np.ndarray:
        if self.is_real():
            return np.array([[float(x.re) for x in row] for row in self.entries])
        return np.array([[x.to_complex() for x in row] for row in self.entries])

    def support_graph(self) -> "SupportGraph":
        return support_graph(self)


def _dot(a: Sequence[GaussianRational], b: Sequence[GaussianRational]) -> GaussianRational:
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def determinant(A: SquareMatrix) -> GaussianRational:
    """Exact determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = A.n
    M = [list(row) for row in A.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((r for r in range(k + 1, n) if M[r][k]), None)
            if swap is None:
                return ZERO
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def leading_minors(A: SquareMatrix) -> list[GaussianRational]:
    return [determinant(A.principal(range(1, k + 1))) for k in range(1, A.n + 1)]


def is_positive_definite(A: SquareMatrix) -> bool:
    """Hermitian with all leading principal minors positive (Sylvester)."""
    if not A.is_hermitian():
        return False
    return all(m.im == 0 and m.re > 0 for m in leading_minors(A))


def is_positive_semidefinite(A: SquareMatrix) -> bool:
    """Hermitian with every principal minor nonnegative; 2^n determinants."""
    if not A.is_hermitian():
        return False
    idx = range(1, A.n + 1)
    for k in range(1, A.n + 1):
        for sub in itertools.combinations(idx, k):
            m = determinant(A.principal(sub))
            if m.im != 0 or m.re < 0:
                return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportGraph:
    """Undirected simple graph on vertices 1..n; edges stored as (i, j), i < j."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} outside 1..{self.n}")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in sorted(self.edges):
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return len(self.edges) == self.n - len(self.components())

    def is_star_centered_at(self, center: int = 1) -> bool:
        """All edges contain ``center`` (isolated vertices allowed)."""
        return all(center in e for e in self.edges)

    def is_path_ordered(self) -> bool:
        """Every edge joins consecutive labels (tridiagonal support)."""
        return all(j - i == 1 for i, j in self.edges)

    def relabeled(self, perm: Permutation) -> "SupportGraph":
        """Graph with vertex v renamed to perm(v)."""
        return SupportGraph(self.n, frozenset((perm(i), perm(j)) for i, j in self.edges))


def support_graph(A: SquareMatrix) -> SupportGraph:
    n = A.n
    edges = {
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if A.entries[i][j] or A.entries[j][i]
    }
    return SupportGraph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Seeded generators.  numpy's PCG64 stream is stable across platforms for a
# fixed seed, which gives the bit-identical determinism contract.


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)


def _ints(rng: np.random.Generator, shape, lo: int = -3, hi: int = 3) -> np.ndarray:
    return rng.integers(lo, hi + 1, size=shape)


def gen_rational(n: int, seed: int, lo: int = -5, hi: int = 5, max_den: int = 4) -> SquareMatrix:
    """Unstructured matrix with small random rational entries."""
    rng = _rng(seed)
    num = _ints(rng, (n, n), lo, hi)
    den = rng.integers(1, max_den + 1, size=(n, n))
    return SquareMatrix([[Fraction(int(num[i, j]), int(den[i, j])) for j in range(n)] for i in range(n)])


def gen_complex(n: int, seed: int, lo: int = -4, hi: int = 4) -> SquareMatrix:
    rng = _rng(seed)
    re = _ints(rng, (n, n), lo, hi)
    im = _ints(rng, (n, n), lo, hi)
    return SquareMatrix([[GaussianRational(int(re[i, j]), int(im[i, j])) for j in range(n)] for i in range(n)])


def _gram(B: list[list[GaussianRational]]) -> list[list[GaussianRational]]:
    """B B^* for a rectangular list-of-rows B."""
    return [[_dot(r, [x.conjugate() for x in s]) for s in B] for r in B]


def gen_pd(n: int, seed: int) -> SquareMatrix:
    """Real symmetric positive definite B B^T + n I with B integer in [-3, 3]."""
    if n < 1:
        raise ValueError("n must be positive")
    B = _ints(_rng(seed), (n, n))
    G = _gram([[gr(int(x)) for x in row] for row in B])
    return SquareMatrix([[G[i][j] + (n if i == j else 0) for j in range(n)] for i in range(n)])


def gen_psd(n: int, seed: int) -> SquareMatrix:
    """Real symmetric positive semidefinite B B^T with B of random rank <= n."""
    rng = _rng(seed)
    k = int(rng.integers(1, n + 1))
    B = _ints(rng, (n, k))
    return SquareMatrix(_gram([[gr(int(x)) for x in row] for row in B]))


def gen_hermitian_pd(n: int, seed: int) -> SquareMatrix:
    """Complex Hermitian positive definite C C^* + n I with Gaussian-integer C."""
    rng = _rng(seed)
    re = _ints(rng, (n, n))
    im = _ints(rng, (n, n))
    C = [[GaussianRational(int(re[i, j]), int(im[i, j])) for j in range(n)] for i in range(n)]
    G = _gram(C)
    return SquareMatrix([[G[i][j] + (n if i == j else 0) for j in range(n)] for i in range(n)])


def gen_hermitian_psd(n: int, seed: int) -> SquareMatrix:
    """Complex Hermitian positive semidefinite C C^* with C of random rank <= n."""
    rng = _rng(seed)
    k = int(rng.integers(1, n + 1))
    re = _ints(rng, (n, k))
    im = _ints(rng, (n, k))
    C = [[GaussianRational(int(re[i, j]), int(im[i, j])) for j in range(k)] for i in range(n)]
    return SquareMatrix(_gram(C))


def random_tree_edges(n: int, rng: np.random.Generator, shape: str = "random") -> list[tuple[int, int]]:
    """Edges of a tree on 1..n.

    ``star`` is centred at 1 and ``path`` is 1-2-...-n; ``random`` attaches
    each vertex to a random earlier one and then shuffles all labels.
    """
    if n == 1:
        return []
    if shape == "star":
        return [(1, k) for k in range(2, n + 1)]
    if shape == "path":
        return [(k, k + 1) for k in range(1, n)]
    if shape != "random":
        raise ValueError(f"unknown tree shape {shape!r}")
    parents = [int(rng.integers(0, k)) for k in range(1, n)]
    labels = [int(x) + 1 for x in rng.permutation(n)]
    return [(labels[p], labels[k]) for k, p in zip(range(1, n), parents)]


def matrix_on_graph(n: int, edges: Iterable[tuple[int, int]], rng: np.random.Generator) -> SquareMatrix:
    """Symmetric, strictly diagonally dominant matrix supported on ``edges``.

    Off-diagonal entries are nonzero integers in [-3, 3]; the diagonal is
    1 + sum of the row's off-diagonal moduli, so the result is positive
    definite.
    """
    M = [[0] * n for _ in range(n)]
    for i, j in sorted(edges):
        v = int(rng.choice([-3, -2, -1, 1, 2, 3]))
        M[i - 1][j - 1] = M[j - 1][i - 1] = v
    for i in range(n):
        M[i][i] = 1 + sum(abs(M[i][j]) for j in range(n) if j != i)
    return SquareMatrix(M)


def gen_tree_pd(n: int, seed: int, shape: str = "random", relabel: bool = False) -> SquareMatrix:
    """Positive definite matrix supported on a tree of the given shape.

    With ``relabel=True`` the tree is renumbered so its labeling satisfies
    the non-crossing condition required by the tree formula.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = _rng(seed)
    edges = random_tree_edges(n, rng, shape)
    if relabel:
        from .structured import relabel_tree

        perm = relabel_tree(SupportGraph(n, frozenset(edges)))
        edges = [(perm(i), perm(j)) for i, j in edges]
    return matrix_on_graph(n, edges, rng)


def gen_tridiagonal_pd(n: int, seed: int) -> SquareMatrix:
    return gen_tree_pd(n, seed, shape="path")


def gen_star_pd(n: int, seed: int) -> SquareMatrix:
    return gen_tree_pd(n, seed, shape="star")


GENERATORS = {
    "pd": gen_pd,
    "psd": gen_psd,
    "hermitian": gen_hermitian_pd,
    "hermitian-psd": gen_hermitian_psd,
    "tree": lambda n, seed: gen_tree_pd(n, seed, "random", relabel=True),
    "tree-raw": lambda n, seed: gen_tree_pd(n, seed, "random"),
    "star": gen_star_pd,
    "tridiagonal": gen_tridiagonal_pd,
    "rational": gen_rational,
    "complex": gen_complex,
}


def generate(kind: str, n: int, seed: int) -> SquareMatrix:
    try:
        gen = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown generator kind {kind!r}; choose from {sorted(GENERATORS)}") from None
    return gen(n, seed)
