"""Exact tools for dual dimers on the torus, their Kasteleyn theory,
tropical fans, mutations, and almost-toric base diagrams."""

__version__ = "0.1.0"
