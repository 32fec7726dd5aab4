"""Deformação de primeira ordem do módulo padrão, congruência da imagem por V e sistema tangente."""

from deformation.universal import UniversalDeformation, indexed_name, universal_deformation
from deformation.residues import sfol_ideal, v_image_residues
from deformation.tangent import TangentDims, foliation_generators, tangent_system

__all__ = [
    "UniversalDeformation",
    "indexed_name",
    "universal_deformation",
    "sfol_ideal",
    "v_image_residues",
    "TangentDims",
    "foliation_generators",
    "tangent_system",
]
