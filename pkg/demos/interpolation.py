"""
The mu-permanent as a polynomial
================================

P_mu(A) sums the usual permutation products, each weighted by mu raised
to the number of inversions.  At mu = -1 it is the determinant, at 0 the
diagonal product and at 1 the permanent.
"""

from muperm import GaussianRational, SquareMatrix, mu_permanent
from muperm.matrices import determinant

A = SquareMatrix([[1, 2], [3, 4]])
P = mu_permanent(A)
print("P_mu([[1,2],[3,4]]) =", P.format(unicode=True))

# the all-ones matrix counts permutations by inversions
print("all-ones 4x4:", mu_permanent(SquareMatrix.ones(4)).format())

# three classical values from one polynomial
B = SquareMatrix([[2, "1/2", 0], [1, 3, -1], ["2/3", 1, 1]])
Q = mu_permanent(B)
print("P_mu(B) =", Q)
print("mu = -1:", Q.evaluate(-1), " det:", determinant(B))
print("mu =  0:", Q.evaluate(0))
print("mu =  1:", Q.evaluate(1))

# complex (here Hermitian) entries stay exact
C = SquareMatrix([[2, GaussianRational(0, 1), 0], [GaussianRational(0, -1), 2, 1], [0, 1, 2]])
print("Hermitian tridiagonal:", mu_permanent(C))
