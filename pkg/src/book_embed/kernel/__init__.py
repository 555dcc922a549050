"""
核化模块

悬挂点删除, 2页线性核, ℓ>=3 页长路径核, 以及核化记录的回放与嵌入提升。
"""

from .lift import lift_embedding, replay_trace
from .models import Chain, KernelStep, KernelTrace, WorkingGraph, find_chains
from .multi_page import kernelize_multi_page, path_threshold
from .pendants import peel_pendants
from .two_page import kernelize_two_page

__all__ = [
    "lift_embedding",
    "replay_trace",
    "Chain",
    "KernelStep",
    "KernelTrace",
    "WorkingGraph",
    "find_chains",
    "kernelize_multi_page",
    "path_threshold",
    "peel_pendants",
    "kernelize_two_page",
]
