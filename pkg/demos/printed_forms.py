"""Two recurrences that only hold with the right coefficient.

The coefficient recurrence for C_n and the difference equation for the
adjoint grid functions are checked in two variants; the variant with the
wrong coefficient breaks at a tiny lattice point.
"""
from __future__ import annotations

from krw import fmt
from krw.model_fd import find_printed_diff2_counterexample
from krw.su2_rep import find_printed_recCn_counterexample

for cex in (find_printed_recCn_counterexample(), find_printed_diff2_counterexample()):
    print(cex["formula"])
    print(f"  fails at {cex['inputs']}: left {fmt(cex['expected'])}, right {fmt(cex['actual'])}")
    print(f"  corrected residual there: {fmt(cex['corrected_residual'])}")
