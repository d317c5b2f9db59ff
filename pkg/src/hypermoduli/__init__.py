"""Exact computation of automorphism groups and fields of moduli of hyperelliptic curves."""

__version__ = "0.1.0"
