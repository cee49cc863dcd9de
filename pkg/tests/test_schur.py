import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from muperm.algebra import MuPoly
from muperm.core import mu_permanent_naive
from muperm.matrices import SquareMatrix, gen_complex, gen_psd, gen_rational
from muperm.schur import (
    SchurCapExceeded,
    averaging_identity,
    check_gamma_psd,
    gamma_exponents,
    gamma_float,
    gamma_mu,
    jacobi_eigenvalues,
    jacobi_eigh,
    lex_permutations,
    perm_rank,
    perm_unrank,
    pi_mu,
    schur_power,
)

from oracles import inversions


def compose_inverse(t, s):
    # tau sigma^{-1} as a tuple of images
    n = len(s)
    inv = [0] * n
    for i, x in enumerate(s):
        inv[x - 1] = i + 1
    return tuple(t[inv[i] - 1] for i in range(n))


def test_rank_unrank_roundtrip():
    for n in range(1, 6):
        perms = list(itertools.permutations(range(1, n + 1)))
        assert lex_permutations(n) == perms
        for r, p in enumerate(perms):
            assert perm_rank(p) == r
            assert perm_unrank(r, n) == p


def test_schur_power_two_by_two():
    a11, a12, a21, a22 = 2, 3, 5, 7
    Pi = schur_power(SquareMatrix([[a11, a12], [a21, a22]]))
    assert Pi.entries == [[a11 * a22, a12 * a21], [a21 * a12, a22 * a11]]


def test_gamma_two_by_two():
    G = gamma_mu(2)
    mu = MuPoly([0, 1])
    assert G.entries == [[MuPoly([1]), mu], [mu, MuPoly([1])]]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gamma_exponents_match_oracle(n):
    perms = lex_permutations(n)
    E = gamma_exponents(n)
    for r, s in enumerate(perms):
        for c, t in enumerate(perms):
            assert E[r, c] == inversions(compose_inverse(t, s))
    assert (E == E.T).all()


def test_pi_mu_two_by_two():
    A = SquareMatrix([[2, 3], [5, 7]])
    Pi = pi_mu(A)
    assert Pi.entries[0][1] == MuPoly([0, 15])
    assert Pi.grand_sum() * Fraction(1, 2) == mu_permanent_naive(A)


@pytest.mark.parametrize("n,seed", [(2, 0), (3, 1), (4, 2), (5, 3)])
def test_averaging_identity(n, seed):
    A = gen_complex(n, seed) if seed % 2 else gen_rational(n, seed)
    p_mu, avg = averaging_identity(A)
    assert p_mu == avg == mu_permanent_naive(A)


def test_row_sums_equal_p_mu():
    A = gen_rational(4, 9)
    P = mu_permanent_naive(A)
    assert all(r == P for r in pi_mu(A).row_sums())


def test_caps():
    with pytest.raises(SchurCapExceeded):
        gamma_mu(7)
    with pytest.raises(SchurCapExceeded):
        check_gamma_psd(6)


def random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    B = rng.normal(size=(n, n))
    return (B + B.T) / 2


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_jacobi_matches_lapack(n, seed):
    M = random_symmetric(n, seed)
    w = jacobi_eigenvalues(M)
    ref = np.linalg.eigvalsh(M)
    assert np.allclose(w, ref, atol=1e-10 * max(1.0, np.abs(ref).max()))


def test_jacobi_vectors_and_degenerate_spectrum():
    # equal diagonal with small couplings: repeated eigenvalues
    M = np.array(
        [
            [12, 0, 0.4, 0, 0, 0.016],
            [0, 12, 0, 0.4, 0.016, 0],
            [0.4, 0, 12, 0.016, 0, 0],
            [0, 0.4, 0.016, 12, 0, 0],
            [0, 0.016, 0, 0, 12, 0.4],
            [0.016, 0, 0, 0, 0.4, 12],
        ]
    )
    w, V = jacobi_eigh(M)
    assert np.allclose(w, np.linalg.eigvalsh(M), atol=1e-11)
    assert np.allclose(M @ V, V * w, atol=1e-10)
    assert np.allclose(V.T @ V, np.eye(6), atol=1e-12)


def test_jacobi_on_gamma_120():
    G = gamma_float(5, 0.3)
    assert abs(jacobi_eigenvalues(G)[0] - np.linalg.eigvalsh(G)[0]) < 1e-9


def test_gamma_small_cases():
    r = check_gamma_psd(2, [-1, 0, 1])
    assert r.passed
    assert r.min_eigenvalues == pytest.approx([0, 1, 0], abs=1e-12)
    r3 = check_gamma_psd(3)
    assert r3.passed and len(r3.mus) == 21


def test_gamma_not_psd_outside_interval():
    # at mu = 2 the 2x2 kernel [[1, 2], [2, 1]] has eigenvalue -1
    assert not check_gamma_psd(2, [2]).passed


def test_psd_pi_mu_is_psd():
    A = gen_psd(3, 4)
    Pi = pi_mu(A)
    for mu in (0, Fraction(1, 2), 1):
        M = Pi.to_numpy(float(mu))
        assert jacobi_eigenvalues(M)[0] >= -1e-8 * max(1.0, math.fabs(M.max()))
