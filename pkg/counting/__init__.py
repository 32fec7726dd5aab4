"""Contagem de pares Γ sobre F_{p^2}, oráculo de subespaços isotrópicos e tabela de graus."""

from counting.gamma import ClosedCount, GammaInstance, gamma_count_bruteforce, gamma_count_closed, gamma_count_fast
from counting.oracle import isotropic_subspace_oracle, subspace_count
from counting.degrees import DegreeTable, check_exponent_identities, degree_table

__all__ = [
    "ClosedCount",
    "GammaInstance",
    "gamma_count_bruteforce",
    "gamma_count_closed",
    "gamma_count_fast",
    "isotropic_subspace_oracle",
    "subspace_count",
    "DegreeTable",
    "check_exponent_identities",
    "degree_table",
]
