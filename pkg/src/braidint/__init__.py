"""Exact integrals, Hopf modules and braided combinatorics for Hopf algebras in Z/n-graded braided categories."""

__version__ = "0.1.0"
