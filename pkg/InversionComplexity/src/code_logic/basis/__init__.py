"""Basis package: generator sets, negation gadgets and inversion bounds."""

from .basis import Basis, BasisToolkit, Bounds, GapWitness, NegationGadget, \
    gap_constant, not_basis

__all__ = [
    "Basis",
    "BasisToolkit",
    "Bounds",
    "GapWitness",
    "NegationGadget",
    "gap_constant",
    "not_basis"
]
