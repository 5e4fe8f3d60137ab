"""Reconstruction of weak quasi Hopf algebras from fusion category data."""

__version__ = "0.1.0"
