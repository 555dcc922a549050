"""
图数据模型

定义多重图、边以及块分解结果。图在构造后不可变, 编辑操作返回新图。
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from ..common.exceptions import SelfLoopError, UnknownElementError


@dataclass(frozen=True)
class Edge:
    """
    多重图中的一条边

    Attributes:
        id: 稳定的边编号
        u: 端点 (较小者不做要求)
        v: 另一端点
    """
    id: int
    u: int
    v: int

    def other(self, x: int) -> int:
        """返回另一端点"""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise UnknownElementError("端点", x, "Edge.other")

    @property
    def ends(self) -> Tuple[int, int]:
        """按顶点编号排序的端点对"""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    def to_dict(self) -> Dict[str, int]:
        """转换为字典"""
        return {"id": self.id, "u": self.u, "v": self.v}


class MultiGraph:
    """
    允许平行边的无向多重图

    顶点编号的数值顺序即全局固定顺序, 所有需要确定顺序的地方都使用它。
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge]):
        self._vertices: Tuple[int, ...] = tuple(sorted(set(vertices)))
        self._edges: Dict[int, Edge] = {}
        self._incident: Dict[int, List[int]] = {v: [] for v in self._vertices}

        for edge in edges:
            if edge.u == edge.v:
                raise SelfLoopError(edge.u)
            if edge.id in self._edges:
                raise UnknownElementError("重复边编号", edge.id, "MultiGraph")
            for end in (edge.u, edge.v):
                if end not in self._incident:
                    raise UnknownElementError("顶点", end, "MultiGraph")
            self._edges[edge.id] = edge
            self._incident[edge.u].append(edge.id)
            self._incident[edge.v].append(edge.id)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], vertices: Optional[Iterable[int]] = None) -> "MultiGraph":
        """
        由端点对构造图, 边编号按出现顺序从0开始

        Args:
            pairs: 端点对序列
            vertices: 额外的顶点 (可包含孤立点)

        Returns:
            MultiGraph: 新图
        """
        pair_list = list(pairs)
        vertex_set = set(vertices or ())
        for u, v in pair_list:
            vertex_set.update((u, v))
        edges = [Edge(i, u, v) for i, (u, v) in enumerate(pair_list)]
        return cls(vertex_set, edges)

    # 基本查询
    @property
    def vertices(self) -> Tuple[int, ...]:
        """按编号排序的顶点"""
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """按编号排序的边"""
        return tuple(self._edges[i] for i in sorted(self._edges))

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(sorted(self._edges))

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._incident

    def has_edge_id(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def edge(self, edge_id: int) -> Edge:
        """
        按编号取边

        Raises:
            UnknownElementError: 编号不存在
        """
        try:
            return self._edges[edge_id]
        except KeyError:
            raise UnknownElementError("边编号", edge_id, "MultiGraph.edge") from None

    def incident(self, v: int) -> Tuple[int, ...]:
        """顶点关联的边编号"""
        if v not in self._incident:
            raise UnknownElementError("顶点", v, "MultiGraph.incident")
        return tuple(self._incident[v])

    def degree(self, v: int) -> int:
        """度数 (平行边分别计数)"""
        return len(self.incident(v))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """去重后的邻居"""
        return tuple(sorted({self._edges[e].other(v) for e in self.incident(v)}))

    def edges_between(self, u: int, v: int) -> Tuple[int, ...]:
        """两点之间的所有平行边"""
        return tuple(e for e in self.incident(u) if self._edges[e].other(u) == v)

    def max_degree(self) -> int:
        return max((len(ids) for ids in self._incident.values()), default=0)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    # 派生结构
    def next_vertex_id(self) -> int:
        return max(self._vertices, default=-1) + 1

    def next_edge_id(self) -> int:
        return max(self._edges, default=-1) + 1

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "MultiGraph":
        """由边集导出的子图 (保留原编号)"""
        chosen = [self.edge(e) for e in edge_ids]
        vertices = {x for edge in chosen for x in (edge.u, edge.v)}
        return MultiGraph(vertices, chosen)

    def induced_subgraph(self, vertices: Iterable[int]) -> "MultiGraph":
        """顶点导出子图 (保留原编号)"""
        keep = set(vertices)
        return MultiGraph(keep, [e for e in self.edges if e.u in keep and e.v in keep])

    def without_vertices(self, removed: Iterable[int]) -> "MultiGraph":
        """删除一组顶点及其关联边"""
        drop = set(removed)
        return self.induced_subgraph(v for v in self._vertices if v not in drop)

    def with_edges(self, added: Iterable[Edge], extra_vertices: Iterable[int] = ()) -> "MultiGraph":
        """添加若干边 (编号由调用方保证唯一)"""
        return MultiGraph(set(self._vertices) | set(extra_vertices), list(self.edges) + list(added))

    def to_networkx(self) -> nx.MultiGraph:
        """转换为 networkx 多重图, 边键为边编号"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=edge.id)
        return graph

    def to_simple_networkx(self) -> nx.Graph:
        """去掉平行边后的简单图"""
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from((edge.u, edge.v) for edge in self.edges)
        return graph

    def to_dict(self) -> Dict[str, object]:
        """转换为字典"""
        return {
            "vertices": list(self._vertices),
            "edges": [edge.to_dict() for edge in self.edges],
        }


@dataclass
class BlockDecomposition:
    """
    块分解结果

    Attributes:
        blocks: 各个块 (二连通或单边), 保留原图编号
        cut_vertices: 割点集合
        vertex_maps: 块顶点到原图顶点的映射
    """
    blocks: List[MultiGraph]
    cut_vertices: FrozenSet[int]
    vertex_maps: List[Mapping[int, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.vertex_maps:
            self.vertex_maps = [{v: v for v in block.vertices} for block in self.blocks]

    def block_of_edge(self, edge_id: int) -> int:
        """边所属块的下标"""
        for index, block in enumerate(self.blocks):
            if block.has_edge_id(edge_id):
                return index
        raise UnknownElementError("边编号", edge_id, "BlockDecomposition.block_of_edge")

    def to_dict(self) -> Dict[str, object]:
        """转换为字典"""
        return {
            "blocks": [sorted(block.edge_ids) for block in self.blocks],
            "cut_vertices": sorted(self.cut_vertices),
        }


@dataclass(frozen=True)
class HamiltonianWitness:
    """
    子哈密顿见证: 覆盖全部顶点的循环序列 H, 使 G 加上 H 的边后仍为平面图

    Attributes:
        cycle: 顶点的循环排列
    """
    cycle: Tuple[int, ...]

    def edges(self) -> List[Tuple[int, int]]:
        """H 的边 (两点时为一对平行边, 一点时为空)"""
        k = len(self.cycle)
        if k < 2:
            return []
        return [(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]

    def to_dict(self) -> Dict[str, object]:
        return {"cycle": list(self.cycle)}


@dataclass(frozen=True)
class BookEmbedding:
    """
    书嵌入: 书脊上的线性顺序与每条边所在的页

    Attributes:
        order: 书脊顺序
        pages: 边编号 -> 页码 (从1开始)
    """
    order: Tuple[int, ...]
    pages: Mapping[int, int]

    @property
    def page_count(self) -> int:
        return max(self.pages.values(), default=0)

    def position(self) -> Dict[int, int]:
        """顶点 -> 书脊位置"""
        return {v: i for i, v in enumerate(self.order)}

    def to_dict(self) -> Dict[str, object]:
        """转换为字典, 边编号作为字符串键"""
        return {
            "order": list(self.order),
            "pages": {str(e): self.pages[e] for e in sorted(self.pages)},
        }
