"""Aritmética exata: F_p, F_{p^2}, matrizes, anel de deformação e derivações."""

from gf.field import FieldContext, FqElt, fq_ops
from gf.matrix import FqMatrix
from gf.defring import DefRingElt, defring_ops
from gf.derivation import Poly2V, VectorField2V, p_power_of_derivation

__all__ = [
    "FieldContext",
    "FqElt",
    "fq_ops",
    "FqMatrix",
    "DefRingElt",
    "defring_ops",
    "Poly2V",
    "VectorField2V",
    "p_power_of_derivation",
]
