"""
球面切分模块

弱套索、套索异或与以参考边为根的球面切分分解。
"""

from .builder import SphereCutBuilder, build_spherecut
from .models import DecompositionArc, SphereCutDecomposition, Subcurve, WeakNoose, try_noose
from .nooses import leaf_noose, noose_from_edges, xor_nooses
from .plan import XorPlan, plan_xor, xor_plan

__all__ = [
    "Subcurve",
    "WeakNoose",
    "try_noose",
    "DecompositionArc",
    "SphereCutDecomposition",
    "SphereCutBuilder",
    "build_spherecut",
    "noose_from_edges",
    "leaf_noose",
    "xor_nooses",
    "XorPlan",
    "plan_xor",
    "xor_plan",
]
