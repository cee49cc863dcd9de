"""Method dispatch for P_mu(A)."""

from __future__ import annotations

from .algebra import MuPoly
from .core import max_n, mu_permanent_laplace, mu_permanent_naive
from .matrices import SquareMatrix, support_graph
from .structured import (
    mu_permanent_star,
    mu_permanent_tree,
    mu_permanent_tridiagonal,
    validate_labeling,
)

METHODS = ("naive", "laplace", "tridiagonal", "star", "tree", "auto")


def choose_method(A: SquareMatrix) -> str:
    """Cheapest applicable method: star, tridiagonal, tree, then laplace/naive."""
    G = support_graph(A)
    if G.edges and G.is_star_centered_at(1) and (A.is_symmetric() or A.is_hermitian()):
        return "star"
    if G.is_path_ordered():
        return "tridiagonal"
    if G.is_forest() and validate_labeling(G).valid:
        return "tree"
    return "laplace" if A.n > max_n() else "naive"


def mu_permanent(A: SquareMatrix, method: str = "auto", jobs: int = 1) -> MuPoly:
    if method == "auto":
        method = choose_method(A)
    if method == "naive":
        return mu_permanent_naive(A, jobs=jobs)
    if method == "laplace":
        return mu_permanent_laplace(A)
    if method == "tridiagonal":
        return mu_permanent_tridiagonal(A)
    if method == "star":
        return mu_permanent_star(A)
    if method == "tree":
        return mu_permanent_tree(A)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
