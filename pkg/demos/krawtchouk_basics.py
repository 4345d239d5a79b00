"""Symmetric Krawtchouk polynomials on a small lattice.

Prints the table K_n(k) for N = 4, checks duality and the mirror rule, and
shows the diagonal orthogonality Gram matrix.
"""
from __future__ import annotations

from krw import fmt, krawtchouk_table, orthogonality_gram

N = 4
t = krawtchouk_table(N)

print(f"K_n(k; 1/2, {N})   rows n, columns k")
for n in range(N + 1):
    print("  " + " ".join(f"{fmt(x):>5}" for x in t.row(n)))

# the table is symmetric in n and k
assert all(t(n, k) == t(k, n) for n in range(N + 1) for k in range(N + 1))

# reflecting the degree flips the sign on odd k
for n in range(N + 1):
    assert t.row(N - n) == tuple((-1) ** k * x for k, x in enumerate(t.row(n)))
print("duality and mirror rule hold")

G = orthogonality_gram(N)
print("Gram diagonal:", [fmt(x) for x in G.diagonal()])
