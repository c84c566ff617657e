"""Symmetry of q,t-Catalan generating functions via chain decompositions."""

from .chainfw import ChainSystem, build_involution_J, decompose_chains, endpoint_genfuns
from .dyck import MDyckWord, area, dinv, enumerate_words, fuss_catalan, genfun
from .garsia_haiman import Partition, ac_genfun, partitions
from .mchains import build_system, chain_map
from .qtpoly import ONE, ZERO, Poly, RatFunc, format_poly, q, t
from .ratslope import RSDyckPath, enumerate_paths, rs_genfun

__all__ = [
    "ChainSystem", "build_involution_J", "decompose_chains", "endpoint_genfuns",
    "MDyckWord", "area", "dinv", "enumerate_words", "fuss_catalan", "genfun",
    "Partition", "ac_genfun", "partitions",
    "build_system", "chain_map",
    "ONE", "ZERO", "Poly", "RatFunc", "format_poly", "q", "t",
    "RSDyckPath", "enumerate_paths", "rs_genfun",
]
