"""Exact Ehrhart coefficients of cross-polytopes and pyramids over them,
their colored-permutation interpretation, and the bijections behind it."""

from .bijection import forward, inverse
from .colored import (
    ColoredPermutation,
    MarkedPermutation,
    enumerate_C,
    from_marked,
    marked_to_word1,
    sign,
    theorem_involution,
    to_marked,
)
from .ehrhart import P, coeffs, gf_series, hstar_to_scaled_coeffs
from .kernels import BACKEND
from .words import CircledWord, count_lattice_points, count_W, enumerate_W

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CircledWord",
    "ColoredPermutation",
    "MarkedPermutation",
    "P",
    "coeffs",
    "count_W",
    "count_lattice_points",
    "enumerate_C",
    "enumerate_W",
    "forward",
    "from_marked",
    "gf_series",
    "hstar_to_scaled_coeffs",
    "inverse",
    "marked_to_word1",
    "sign",
    "theorem_involution",
    "to_marked",
]
