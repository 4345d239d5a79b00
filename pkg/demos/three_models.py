"""One eigenproblem, three function-space realizations.

Grid functions (finite differences), polynomials under first-order operators
(Bargmann) and polynomials under a second-order lowering operator
(Barut-Girardello).  Each side yields the same Gram matrix.
"""
from __future__ import annotations

from krw import fmt
from krw.model_bargmann import bargmann_adjoint_operators, bargmann_biorthogonality, bargmann_lambda, bargmann_lambda_star
from krw.model_bg import bg_biorthogonality, bg_lambda, bg_lambda_star, bg_operators
from krw.model_fd import fd_biorthogonality, fd_lambda

N, k = 3, 1


def laurent(f):
    return " + ".join(f"({fmt(c)}) z^{e}" for e, c in sorted(f.terms().items(), reverse=True))


print(f"N={N}, k={k}")
print("  grid      lambda:", [fmt(x) for x in fd_lambda(k, N).values])
print("  Bargmann  lambda:", [fmt(x) for x in bargmann_lambda(k, N).coeffs], " = (1-z)(1+z)^2")
print("  Bargmann  lambda*:", laurent(bargmann_lambda_star(k, N)))
print("  BG        lambda:", [fmt(x) for x in bg_lambda(k, N).coeffs])
print("  BG        lambda*:", laurent(bg_lambda_star(k, N)))

# operators whose image leaves the finite span; the projector drops that part
print("Bargmann adjoint truncations:", [op.leaked for op in bargmann_adjoint_operators(N)])
print("BG truncations:              ", [op.leaked for op in bg_operators(N)])

G = fd_biorthogonality(N)
assert G == bargmann_biorthogonality(N) == bg_biorthogonality(N)
print("shared Gram diagonal:", [fmt(x) for x in G.diagonal()])
