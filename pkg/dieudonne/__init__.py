"""Módulo de Dieudonné padrão em S_fol, subespaços através de twists e filtração canônica."""

from dieudonne.module import DieudonneModule, standard_fol_module
from dieudonne.subspace import Subspace, map_image, map_kernel, map_preimage, twist, type_profile
from dieudonne.lattice import LatticePair, lattice_step, r_of
from dieudonne.canonical import canonical_M, canonical_word, vq_image
from dieudonne.hasse import hasse_determinant, hasse_matrix

__all__ = [
    "DieudonneModule",
    "standard_fol_module",
    "Subspace",
    "map_image",
    "map_kernel",
    "map_preimage",
    "twist",
    "type_profile",
    "LatticePair",
    "lattice_step",
    "r_of",
    "canonical_M",
    "canonical_word",
    "vq_image",
    "hasse_determinant",
    "hasse_matrix",
]
