"""Exact root-datum computations for checking the representation theory behind
epsilon-dichotomy models: dual groups, torsion elements, branching, signs."""

__version__ = "0.1.0"
