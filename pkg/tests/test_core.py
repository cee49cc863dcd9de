import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from muperm.algebra import GaussianRational, MuPoly
from muperm.compute import choose_method, mu_permanent
from muperm.core import (
    DimensionCapExceeded,
    bordered_matrix,
    conjugated_mu_permanent,
    multivariable_qdet,
    mu_permanent_laplace,
    mu_permanent_naive,
    q_complementary,
    specialize,
)
from muperm.matrices import Permutation, SquareMatrix, gen_complex, gen_rational

from oracles import brute_mu_permanent, brute_permanent, brute_qdet, gauss_det

# distinct primes make every product of n entries identify its permutation
P2 = [[2, 3], [5, 7]]
P3 = [[2, 3, 5], [7, 11, 13], [17, 19, 23]]


def a(M, i, j):
    return M[i - 1][j - 1]


def test_golden_two_by_two():
    P = mu_permanent_naive(SquareMatrix(P2))
    assert P == MuPoly([a(P2, 1, 1) * a(P2, 2, 2), a(P2, 1, 2) * a(P2, 2, 1)])


def test_golden_three_by_three():
    m = P3
    expected = MuPoly(
        [
            a(m, 1, 1) * a(m, 2, 2) * a(m, 3, 3),
            a(m, 1, 1) * a(m, 2, 3) * a(m, 3, 2) + a(m, 1, 2) * a(m, 2, 1) * a(m, 3, 3),
            a(m, 1, 2) * a(m, 2, 3) * a(m, 3, 1) + a(m, 1, 3) * a(m, 2, 1) * a(m, 3, 2),
            a(m, 1, 3) * a(m, 2, 2) * a(m, 3, 1),
        ]
    )
    for method in ("naive", "laplace"):
        assert mu_permanent(SquareMatrix(m), method) == expected


def test_small_examples():
    assert mu_permanent(SquareMatrix([[1, 2], [3, 4]])) == MuPoly([4, 6])
    assert mu_permanent(SquareMatrix.identity(5)) == MuPoly([1])
    assert mu_permanent(SquareMatrix.ones(3)) == MuPoly([1, 2, 2, 1])
    assert specialize(SquareMatrix([[1, 2], [3, 4]]), -1) == -2


def test_qdet_golden_two_by_two():
    Q = multivariable_qdet(SquareMatrix(P2))
    assert Q.coeff((0,)) == 2 * 7
    assert Q.coeff((1,)) == -3 * 5


def test_qdet_golden_three_by_three():
    m = P3
    Q = multivariable_qdet(SquareMatrix(m))
    expected = {
        (0, 0): a(m, 1, 1) * a(m, 2, 2) * a(m, 3, 3),
        (0, 1): -a(m, 1, 1) * a(m, 2, 3) * a(m, 3, 2),
        (1, 0): -a(m, 1, 2) * a(m, 2, 1) * a(m, 3, 3),
        (1, 1): a(m, 1, 2) * a(m, 2, 3) * a(m, 3, 1),
        (2, 0): a(m, 1, 3) * a(m, 2, 1) * a(m, 3, 2),
        (2, 1): -a(m, 1, 3) * a(m, 2, 2) * a(m, 3, 1),
    }
    assert {k: v for k, v in Q.terms.items()} == {k: GaussianRational(v) for k, v in expected.items()}


@pytest.mark.parametrize("seed", range(6))
def test_qdet_matches_oracle_and_specialises(seed):
    A = gen_complex(4, seed)
    Q = multivariable_qdet(A)
    assert dict(Q.terms) == brute_qdet(A)
    # q_i = -mu turns the q-determinant into P_mu
    assert Q.substitute_all(MuPoly([0, -1])) == mu_permanent_naive(A)


def test_qdet_not_transpose_invariant():
    # the multivariable weights are not symmetric under transposition
    A = SquareMatrix(P3)
    assert multivariable_qdet(A) != multivariable_qdet(A.transpose())


@pytest.mark.parametrize("seed", range(12))
def test_naive_matches_brute_force(seed):
    n = 2 + seed % 5
    A = gen_rational(n, seed) if seed % 2 else gen_complex(n, seed)
    assert mu_permanent_naive(A) == brute_mu_permanent(A)


@pytest.mark.parametrize("seed", range(10))
def test_specialisations(seed):
    A = gen_rational(2 + seed % 5, seed)
    P = mu_permanent_naive(A)
    assert P.evaluate(-1) == gauss_det(A)
    assert P.evaluate(1) == brute_permanent(A)
    diag = GaussianRational(1)
    for i in range(A.n):
        diag = diag * A[i, i]
    assert P.evaluate(0) == diag


@pytest.mark.parametrize("seed", range(6))
def test_transpose_invariance(seed):
    A = gen_complex(4, seed)
    assert mu_permanent_naive(A) == mu_permanent_naive(A.transpose())


@pytest.mark.parametrize("seed", range(4))
def test_laplace_every_row_and_column(seed):
    A = gen_rational(4, seed) if seed % 2 else gen_complex(4, seed)
    naive = mu_permanent_naive(A)
    for k in range(1, 5):
        assert mu_permanent_laplace(A, "row", k) == naive
        assert mu_permanent_laplace(A, "column", k) == naive


def test_q_complementary_block_pattern():
    A = SquareMatrix(P3)
    M = q_complementary(A, 2, 2)
    mu = MuPoly([0, 1])
    assert M.entries == ((MuPoly([2]), MuPoly([5]) * mu), (MuPoly([17]) * mu, MuPoly([23])))


def test_laplace_beyond_naive_cap():
    A = SquareMatrix([[1 if abs(i - j) <= 1 else 0 for j in range(11)] for i in range(11)])
    with pytest.raises(DimensionCapExceeded):
        mu_permanent_naive(A)
    P = mu_permanent_laplace(A)
    assert P == mu_permanent(A, "tridiagonal")
    assert choose_method(A) == "tridiagonal"


def test_env_cap(monkeypatch):
    monkeypatch.setenv("MUPERM_MAX_N", "3")
    with pytest.raises(DimensionCapExceeded):
        mu_permanent_naive(SquareMatrix.ones(4))
    assert mu_permanent(SquareMatrix.ones(4)) == brute_mu_permanent(SquareMatrix.ones(4))


def test_jobs_do_not_change_result():
    A = gen_complex(6, 3)
    assert mu_permanent_naive(A, jobs=2) == mu_permanent_naive(A)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), st.fractions(-5, 5, max_denominator=6))
def test_multilinear_in_rows(seed, row, c):
    A = gen_rational(4, seed)
    B = gen_rational(4, seed + 1)
    mixed = A.with_row(row, [x * c + y for x, y in zip(A.entries[row - 1], B.entries[row - 1])])
    lhs = mu_permanent_naive(mixed)
    rhs = mu_permanent_naive(A) * c + mu_permanent_naive(A.with_row(row, B.entries[row - 1]))
    assert lhs == rhs


def test_antidiagonal_top_coefficient():
    n = 5
    A = gen_rational(n, 7)
    P = mu_permanent_naive(A)
    top = GaussianRational(1)
    for i in range(n):
        top = top * A[i, n - 1 - i]
    assert P.coeff(n * (n - 1) // 2) == top


def test_bordered_matrix_gives_complementary_minor():
    A = gen_rational(4, 11)
    for i in range(1, 5):
        for j in range(1, 5):
            # only sigma with sigma(i) = j survive; their inversions through
            # (i, j) are what the mu factors of A_ij(mu) account for
            B = bordered_matrix(A, i, j)
            assert mu_permanent_naive(B) == mu_permanent_naive(q_complementary(A, i, j))


def test_conjugation_example():
    tau = Permutation((2, 1, 3))
    sigma = Permutation((1, 3, 2))
    assert (tau * sigma * tau.inverse()).images == (3, 2, 1)
    for seed in range(3):
        A = gen_complex(4, seed)
        for tau in (Permutation((2, 1, 3, 4)), Permutation((4, 3, 1, 2))):
            assert conjugated_mu_permanent(A, tau) == mu_permanent_naive(A.permutation_similar(tau))
