"""Exact construction and verification of Weyl group lifts into classical groups."""

from weylift._backend import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
