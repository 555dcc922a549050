"""
平面性模块

平面性检测、组合嵌入、面遍历与加环平面性检测。
"""

from .embedding import cycle_sides, faces, is_planar, planar_embedding, planar_with_cycle, trace_faces
from .models import CombinatorialEmbedding, NonPlanar

__all__ = [
    "CombinatorialEmbedding",
    "NonPlanar",
    "planar_embedding",
    "faces",
    "is_planar",
    "planar_with_cycle",
    "cycle_sides",
    "trace_faces",
]
