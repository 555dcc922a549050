"""
book-embed - 2页书嵌入的判定与构造

子哈密顿性 (等价于存在2页书嵌入) 的SPQR树与球面切分动态规划判定, 按反馈边数的核化,
以及用于对照的暴力求解器。
"""

__version__ = "1.0.0"

from .common.config import SolverConfig
from .common.constants import Verdict
from .common.exceptions import BookEmbedException
from .dp.solver import decide_subham
from .graph.models import BookEmbedding, MultiGraph

__all__ = [
    "SolverConfig",
    "Verdict",
    "BookEmbedException",
    "decide_subham",
    "BookEmbedding",
    "MultiGraph",
    "__version__",
]
