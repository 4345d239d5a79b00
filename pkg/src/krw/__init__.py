"""Exact su(2) models and generating functions of symmetric Krawtchouk
polynomials."""
from .exact_algebra import Laurent, Matrix, Poly, Series, binomial, fmt, pochhammer, residue_pair
from .krawtchouk import krawtchouk_eval, krawtchouk_table, orthogonality_gram
from .pade_kummer import kummer_residual, pade_exp, pade_order_first_defect, truncated_1f1

__version__ = "0.1.0"
