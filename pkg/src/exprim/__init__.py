"""Verification toolkit for extreme primitivity of affine groups over GF(2).

Mechanizes the desk-scale computations behind the classification of
extremely primitive affine groups in characteristic 2: bit-packed GF(2)
linear algebra, matrix-group orbit and block-system decision procedures,
MeatAxe-style irreducibility and chopping, regular-orbit certification,
Weyl orbit sizes, and exact certification of power-of-two inequalities.
"""

from .errors import CapExceeded, DimensionTooLarge, ExprimError, FormatError, ResourceLimit
from .gf2 import (
    Echelon,
    GF2Matrix,
    GF2Vector,
    JordanType,
    exterior_power,
    fixed_space_dim,
    inverse,
    involution_jordan_type,
    kernel_basis,
    rank,
    tensor,
    tensor_jordan_involutions,
)

__version__ = "0.1.0"
