"""Gorenstein-projective modules and their universal deformation rings over cyclic Nakayama algebras."""
from .algebra import ZERO, NakayamaAlgebra, Uniserial, parse_kupisch, parse_module, validate_kupisch
from .core_equiv import CorePosition, core_length, distance_to_boundary, position, stable_tube
from .defring import DefRingPresentation, jn_generators, matrix_n, udr
from .gorenstein import (
    GorensteinCore,
    SyzygyOrbit,
    build_core,
    elementaries,
    is_gorenstein_projective,
    is_in_core,
    is_minimal_projective,
    syzygy_orbit,
)
from .poly import SparsePoly

__version__ = "0.1.0"

__all__ = [
    "ZERO",
    "CorePosition",
    "DefRingPresentation",
    "GorensteinCore",
    "NakayamaAlgebra",
    "SparsePoly",
    "SyzygyOrbit",
    "Uniserial",
    "build_core",
    "core_length",
    "distance_to_boundary",
    "elementaries",
    "is_gorenstein_projective",
    "is_in_core",
    "is_minimal_projective",
    "jn_generators",
    "matrix_n",
    "parse_kupisch",
    "parse_module",
    "position",
    "stable_tube",
    "syzygy_orbit",
    "udr",
    "validate_kupisch",
]
