"""
SPQR树模块

二连通多重图的SPQR树构建与相关图查询。
"""

from .builder import SpqrBuilder, build_spqr, pertinent_graph
from .models import SpqrNode, SpqrTree

__all__ = [
    "SpqrBuilder",
    "SpqrNode",
    "SpqrTree",
    "build_spqr",
    "pertinent_graph",
]
