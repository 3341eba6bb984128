"""Nilpotent Dirac state vectors as an exact finite group algebra, with the
bound-state, charge-structure, unification and mass machinery built on top."""

__version__ = "0.1.0"
