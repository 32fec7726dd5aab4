"""Combinatória de shuffles, ordem de Bruhat, ordem EO e poset de estratos."""

from weyl.permutation import Permutation
from weyl.shuffles import (
    ShuffleLabel,
    StratumInfo,
    a_sigma,
    enumerate_shuffles,
    s_sharp_embedding,
    shuffle_length,
    special_elements,
    stratum_info,
)
from weyl.bruhat import bruhat_leq
from weyl.eo_order import eo_leq
from weyl.poset import StratumPoset, eo_poset

__all__ = [
    "Permutation",
    "ShuffleLabel",
    "StratumInfo",
    "a_sigma",
    "enumerate_shuffles",
    "s_sharp_embedding",
    "shuffle_length",
    "special_elements",
    "stratum_info",
    "bruhat_leq",
    "eo_leq",
    "StratumPoset",
    "eo_poset",
]
