"""
通用模块

常量、异常、配置与日志。
"""

from .config import SolverConfig, load_config
from .constants import DEFAULT_CONFIG, ExitCode, NodeKind, Verdict, VertexRole
from .exceptions import BookEmbedException

__all__ = [
    "SolverConfig",
    "load_config",
    "DEFAULT_CONFIG",
    "ExitCode",
    "NodeKind",
    "Verdict",
    "VertexRole",
    "BookEmbedException",
]
