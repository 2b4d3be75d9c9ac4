"""Exact SL(2) multilinear calculus over Q and prime fields.

Turns divided/symmetric/exterior power constructions on the standard
2-dimensional representation into explicit integer matrices: Hermite
reciprocity isomorphisms, Schwarzenberger bundle cohomology tables, Hankel
determinantal invariants and their Koszul-homology oracle, and the 3-term
(bi)graded complexes whose middle homology governs generic Green's
conjecture checks.
"""

from .fields import QQ, PrimeField, field_of_characteristic
from .matrices import (ExactMatrix, compose, determinant, inverse,
                       kernel_basis, kernel_dim, kronecker, rank)
from .spaces import (CharPoly, D, Sym, Tensor, Trivial, U, Wedge, basis,
                     character, d_u, dim, sym_u, weights)

CONVENTIONS_VERSION = "1"

__all__ = [
    "QQ", "PrimeField", "field_of_characteristic",
    "ExactMatrix", "compose", "determinant", "inverse", "kernel_basis",
    "kernel_dim", "kronecker", "rank",
    "CharPoly", "D", "Sym", "Tensor", "Trivial", "U", "Wedge", "basis",
    "character", "d_u", "dim", "sym_u", "weights",
    "CONVENTIONS_VERSION",
]
