"""Polynomial-time mu-permanents for stars, tridiagonal and tree matrices.

When the support graph of A is a forest, the only permutations with a
nonzero term are products of disjoint transpositions along edges, i.e.
matchings.  A transposition (i j), i < j, has 2(j - i) - 1 inversions, and
inversion counts add up over a matching as long as no two disjoint edges
cross (labels i < k < j < l).  :func:`validate_labeling` checks that
condition and :func:`relabel_tree` produces a labeling that satisfies it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import MuPoly, gr
from .matrices import Permutation, SquareMatrix, SupportGraph, support_graph


class PreconditionError(ValueError):
    """The input does not have the structure a specialised method needs."""


Edge = tuple[int, int]


@dataclass(frozen=True)
class LabelingReport:
    valid: bool
    violations: list[tuple[Edge, Edge]] = field(default_factory=list)


def _crossing(e: Edge, f: Edge) -> bool:
    (i, j), (k, l) = sorted([e, f])
    # with i < k: allowed are i<j<k<l (disjoint) and i<k<l<j (nested)
    return i < k < j < l


def validate_labeling(G: SupportGraph) -> LabelingReport:
    """Report every pair of vertex-disjoint edges whose label intervals cross."""
    edges = G.sorted_edges()
    bad = []
    for e, f in itertools.combinations(edges, 2):
        if set(e) & set(f):
            continue
        if _crossing(e, f):
            bad.append((e, f))
    return LabelingReport(valid=not bad, violations=bad)


def relabel_tree(G: SupportGraph) -> Permutation:
    """Relabeling (old vertex v -> new label perm(v)) that passes the validator.

    Vertices are numbered in depth-first preorder, one component after
    another, so every subtree occupies a contiguous block of labels; two
    disjoint edges then span either disjoint or nested intervals.
    """
    if not G.is_forest():
        raise PreconditionError("support graph contains a cycle")
    adj = G.adjacency()
    new = [0] * (G.n + 1)
    nxt = 1
    for root in range(1, G.n + 1):
        if new[root]:
            continue
        stack = [root]
        while stack:
            v = stack.pop()
            if new[v]:
                continue
            new[v] = nxt
            nxt += 1
            stack.extend(sorted((w for w in adj[v] if not new[w]), reverse=True))
    return Permutation(tuple(new[1:]))


def relabel_matrix(A: SquareMatrix, perm: Permutation) -> SquareMatrix:
    """Matrix B with B[perm(i)][perm(j)] = A[i][j]."""
    return A.permutation_similar(perm)


def transposition_weight(i: int, j: int) -> int:
    """Inversion number of the transposition (i j)."""
    return 2 * abs(j - i) - 1


def _require_forest(A: SquareMatrix) -> SupportGraph:
    G = support_graph(A)
    if not G.is_forest():
        raise PreconditionError("support graph is not a forest")
    report = validate_labeling(G)
    if not report.valid:
        raise PreconditionError(f"labeling has crossing edges: {report.violations[:3]}")
    return G


def _edge_weight(A: SquareMatrix, i: int, j: int) -> MuPoly:
    return MuPoly.monomial(A.entry(i, j) * A.entry(j, i), transposition_weight(i, j))


def mu_permanent_star(A: SquareMatrix) -> MuPoly:
    """Closed form for a symmetric/Hermitian matrix whose graph is a star at 1."""
    if not (A.is_symmetric() or A.is_hermitian()):
        raise PreconditionError("star formula needs a symmetric or Hermitian matrix")
    G = support_graph(A)
    if not G.is_star_centered_at(1):
        raise PreconditionError("support graph is not a star centred at vertex 1")
    n = A.n
    diag = [A.entry(k, k) for k in range(1, n + 1)]
    total = MuPoly.constant(_prod(diag))
    for k in range(2, n + 1):
        w = A.entry(1, k) * A.entry(k, 1)
        if not w:
            continue
        rest = _prod(diag[i - 1] for i in range(2, n + 1) if i != k)
        total = total + MuPoly.monomial(w * rest, 2 * k - 3)
    return total


def _prod(xs):
    acc = gr(1)
    for x in xs:
        acc = acc * x
    return acc


def mu_permanent_tridiagonal(A: SquareMatrix) -> MuPoly:
    """Three-term recurrence P_k = a_kk P_{k-1} + mu a_{k,k-1} a_{k-1,k} P_{k-2}."""
    n = A.n
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and A[i, j]:
                raise PreconditionError("matrix is not tridiagonal")
    prev2, prev = MuPoly.constant(1), MuPoly.constant(A[0, 0])
    for k in range(1, n):
        cur = prev * A[k, k] + prev2.shift(1) * (A[k, k - 1] * A[k - 1, k])
        prev2, prev = prev, cur
    return prev


def mu_permanent_tree(A: SquareMatrix) -> MuPoly:
    """Sum over matchings of the support forest, by dynamic programming.

    For each rooted subtree we keep ``total`` (all matchings) and ``free``
    (matchings in which the root is matched to nobody and contributes no
    diagonal factor, used when the root pairs with its parent).
    """
    G = _require_forest(A)
    adj = G.adjacency()
    total: dict[int, MuPoly] = {}
    free: dict[int, MuPoly] = {}
    seen = [False] * (G.n + 1)
    result = MuPoly.constant(1)
    for root in range(1, G.n + 1):
        if seen[root]:
            continue
        order, parent = [], {root: 0}
        stack = [root]
        seen[root] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    stack.append(w)
        for v in reversed(order):
            kids = [w for w in adj[v] if parent.get(w) == v]
            tots = [total[w] for w in kids]
            # prefix[k] * suffix[k+1] is the product of all totals except kid k
            prefix = [MuPoly.constant(1)]
            for t in tots:
                prefix.append(prefix[-1] * t)
            suffix = [MuPoly.constant(1)]
            for t in reversed(tots):
                suffix.append(suffix[-1] * t)
            suffix.reverse()
            free[v] = prefix[-1]
            matched = MuPoly()
            for k, w in enumerate(kids):
                matched = matched + _edge_weight(A, v, w) * free[w] * prefix[k] * suffix[k + 1]
            total[v] = free[v] * A.entry(v, v) + matched
        result = result * total[root]
    return result


def enumerate_matchings(G: SupportGraph) -> list[list[Edge]]:
    """All matchings of G (including the empty one), by brute force."""
    edges = G.sorted_edges()
    out = []
    for r in range(len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            used = [v for e in combo for v in e]
            if len(used) == len(set(used)):
                out.append(list(combo))
    return out


def matching_permutation(n: int, matching: list[Edge]) -> Permutation:
    images = list(range(1, n + 1))
    for i, j in matching:
        images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def mu_permanent_matchings(A: SquareMatrix) -> MuPoly:
    """Explicit matching sum with additive weights; slow reference for the DP."""
    G = _require_forest(A)
    total = MuPoly()
    for m in enumerate_matchings(G):
        matched = {v for e in m for v in e}
        term = MuPoly.constant(_prod(A.entry(v, v) for v in range(1, A.n + 1) if v not in matched))
        for i, j in m:
            term = term * _edge_weight(A, i, j)
        total = total + term
    return total
