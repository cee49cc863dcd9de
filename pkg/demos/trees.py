"""
Tree-supported matrices
=======================

When the off-diagonal support of A is a forest, only products of disjoint
transpositions contribute.  If no two disjoint edges have crossing label
intervals, their inversion counts add and P_mu(A) is a sum over matchings.
"""

from muperm import mu_permanent, mu_permanent_naive, relabel_tree, support_graph, validate_labeling
from muperm.matrices import gen_tree_pd
from muperm.structured import relabel_matrix

A = gen_tree_pd(8, seed=3)  # random labels
G = support_graph(A)
print("edges:", G.sorted_edges())
report = validate_labeling(G)
print("valid labeling:", report.valid, "crossings:", report.violations)

perm = relabel_tree(G)
B = relabel_matrix(A, perm)
print("after relabeling:", support_graph(B).sorted_edges(), validate_labeling(support_graph(B)).valid)

P = mu_permanent(B, "tree")
print("tree formula:", P)
print("matches naive:", P == mu_permanent_naive(B))

# the matching sum scales far beyond the permutation sum
big = gen_tree_pd(40, seed=1, relabel=True)
print("n=40 tree, degree", mu_permanent(big).degree)
