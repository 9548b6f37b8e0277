"""Exact-arithmetic toolkit for dendriform, pre-Lie, perm, associative and Lie
algebras, their bialgebras, Yang-Baxter equations and affinization checks.

All coefficients are rational numbers (`fractions.Fraction`); every check is an
exact zero/nonzero test.
"""

__version__ = "0.1.0"
