"""Exact genus-2 Jacobian arithmetic in Mumford coordinates, with division
polynomials for 2-, 3-, and 4-torsion divisors and an independent Cantor
oracle for verification."""

from .curves import CanonicalCurve, GeneralCurve, PointMap, to_canonical
from .divisors import MumfordDivisor, mumford_from_points, negate, points_from_mumford
from .fields import GF, QQ, FieldElement, FieldSpec
from .grouplaw import add, double, scalar_mul
from .torsion import (
    emit_division_polynomials,
    find_four_torsion,
    find_three_torsion,
    is_torsion,
    two_torsion_divisors,
)

__all__ = [
    "CanonicalCurve",
    "GeneralCurve",
    "PointMap",
    "to_canonical",
    "MumfordDivisor",
    "mumford_from_points",
    "points_from_mumford",
    "negate",
    "GF",
    "QQ",
    "FieldElement",
    "FieldSpec",
    "add",
    "double",
    "scalar_mul",
    "is_torsion",
    "two_torsion_divisors",
    "find_three_torsion",
    "find_four_torsion",
    "emit_division_polynomials",
]

__version__ = "0.1.0"
