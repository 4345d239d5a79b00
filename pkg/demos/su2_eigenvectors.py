"""The irrep matrices and the eigenvectors of X = (J+ + J-)/2.

Eigenvectors are solved from the tridiagonal matrix and come out as
binomial-weighted Krawtchouk values; the transposed problem gives the bare
values, and the two families are biorthogonal.
"""
from __future__ import annotations

from krw import fmt
from krw.su2_rep import (
    biorthogonality_gram,
    build_irrep,
    casimir,
    x_adjoint_eigenvector,
    x_eigenvector,
)

N = 3
rep = build_irrep(N)
print("J+ =")
for row in rep.Jp.to_lists():
    print("  ", [fmt(x) for x in row])
print("commutators hold:", rep.satisfies_commutators())
print("Casimir diagonal:", [fmt(x) for x in casimir(rep).diagonal()])

for k in range(N + 1):
    C = x_eigenvector(k, N)
    Cs = x_adjoint_eigenvector(k, N)
    print(f"k={k}  eigenvalue {fmt(C.value):>4}  C = {[fmt(x) for x in C.vector]}  C* = {[fmt(x) for x in Cs.vector]}")

print("<C*_k, C_l> diagonal:", biorthogonality_gram(N).is_diagonal())
