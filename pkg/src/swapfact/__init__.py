"""Exact swap-map calculus: arbitrarily long positive Dehn twist
factorizations on a genus-11 surface and their machine verification."""

__version__ = "0.1.0"
