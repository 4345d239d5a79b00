"""Pade approximants of exp(z) as ratios of truncated 1F1 series.

For each (n, m) the rational function agrees with exp(z) through z^(n+m);
the first disagreeing coefficient is printed.
"""
from __future__ import annotations

from krw import fmt, kummer_residual, pade_exp, pade_order_first_defect

print(" n m   numerator                    denominator          defect")
for n in range(4):
    for m in range(4):
        if n + m == 0:
            continue
        p = pade_exp(n, m)
        idx, val = pade_order_first_defect(n, m)
        num = " ".join(fmt(c) for c in p.numerator.coeffs)
        den = " ".join(fmt(c) for c in p.denominator.coeffs)
        print(f" {n} {m}   {num:<28} {den:<20} z^{idx}: {fmt(val)}")

# the truncated Kummer transformation behind the construction
N = 6
print("Kummer residual zero for a = -6..3:", all(not any(kummer_residual(a, N).coeffs) for a in range(-N, 4)))
