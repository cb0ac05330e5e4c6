"""Degree-n polynomials irreducible over Q that factor modulo every prime
or over every p-adic completion: constructions, group-theoretic obstruction
checks, and machine-checkable certificates, all in exact arithmetic."""

from .intpoly import IntPolynomial, RatPolynomial

__all__ = ["IntPolynomial", "RatPolynomial"]
__version__ = "0.1.0"
