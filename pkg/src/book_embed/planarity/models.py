"""
组合嵌入数据模型

旋转系统加面遍历, 代替所有几何画法。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from ..graph.models import MultiGraph

# 有向边: (出发顶点, 边编号)
Dart = Tuple[int, int]
# 角: (顶点, 旋转位置 i), 位于 rotation[v][i] 与 rotation[v][i+1] 之间
Corner = Tuple[int, int]


@dataclass
class CombinatorialEmbedding:
    """
    组合嵌入

    Attributes:
        graph: 被嵌入的多重图
        rotation: 顶点 -> 顺时针排列的关联边编号
        faces: 每个面的边界遍历, 有向边序列
        outer_face: 外面编号 (任意指定)
        dart_face: 有向边 -> 面编号
        corner_face: 角 -> 面编号
    """
    graph: MultiGraph
    rotation: Dict[int, Tuple[int, ...]]
    faces: List[Tuple[Dart, ...]] = field(default_factory=list)
    outer_face: int = 0
    dart_face: Dict[Dart, int] = field(default_factory=dict)
    corner_face: Dict[Corner, int] = field(default_factory=dict)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def position(self, v: int, edge_id: int) -> int:
        """边在顶点旋转中的位置"""
        return self.rotation[v].index(edge_id)

    def face_of_corner(self, v: int, index: int) -> int:
        return self.corner_face[(v, index % len(self.rotation[v]))]

    def faces_of_edge(self, edge_id: int) -> Tuple[int, int]:
        """边两侧的面 (按编号排序)"""
        edge = self.graph.edge(edge_id)
        first = self.dart_face[(edge.u, edge_id)]
        second = self.dart_face[(edge.v, edge_id)]
        return (first, second) if first <= second else (second, first)

    def face_vertices(self, face_id: int) -> List[int]:
        return [v for v, _ in self.faces[face_id]]

    def mirrored(self) -> "CombinatorialEmbedding":
        """镜像嵌入: 每个旋转反向"""
        from .embedding import trace_faces

        rotation = {v: tuple(reversed(order)) for v, order in self.rotation.items()}
        return trace_faces(self.graph, rotation)

    def to_dict(self) -> Dict[str, object]:
        """转换为字典"""
        return {
            "rotation": {str(v): list(order) for v, order in sorted(self.rotation.items())},
            "faces": [[list(dart) for dart in walk] for walk in self.faces],
            "outer_face": self.outer_face,
        }


@dataclass(frozen=True)
class NonPlanar:
    """
    非平面判定结果 (不是异常)

    Attributes:
        n: 顶点数
        m: 边数
        reason: 说明
    """
    n: int
    m: int
    reason: str = "networkx 平面性检测失败"

    def __bool__(self) -> bool:
        return False


EmbeddingResult = Optional[CombinatorialEmbedding]
RotationMap = Mapping[int, Tuple[int, ...]]
