"""
核化数据模型

核化步骤只有两类: 删除度数不超过1的顶点, 以及把一个顶点并入相邻的度2顶点。
路径缩短被记录为一串以同一个保留顶点为中心的收缩, 因而回放与提升只需处理这两类步骤。
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..common.constants import KernelRule, TWO_PAGE_EDGE_BOUND, TWO_PAGE_VERTEX_BOUND
from ..common.exceptions import ContractViolationError, UnknownElementError
from ..graph.models import Edge, MultiGraph


@dataclass(frozen=True)
class KernelStep:
    """
    一次规则应用

    Attributes:
        rule: 规则
        gone: 被删除或被并入的顶点
        kept: 删除时为唯一邻居 (孤立点为 None); 收缩时为保留的顶点
        edge: 删除时为唯一关联边; 收缩时为被收缩的边
        moved: 收缩时从 gone 改接到 kept 的边
    """
    rule: KernelRule
    gone: int
    kept: Optional[int] = None
    edge: Optional[int] = None
    moved: Optional[int] = None

    @property
    def is_contraction(self) -> bool:
        return self.rule is not KernelRule.PENDANT_DELETE

    def to_dict(self) -> Dict[str, object]:
        return {
            "rule": self.rule.value,
            "gone": self.gone,
            "kept": self.kept,
            "edge": self.edge,
            "moved": self.moved,
        }


@dataclass
class KernelTrace:
    """
    核化记录

    Attributes:
        original: 输入图
        kernel: 核
        pages: 目标页数 ℓ
        steps: 依次应用的规则
        fen: 去掉悬挂点后的反馈边数
        sets: 辅助集合 B_F, V_F, T_1, T_>=3 以及最终的 B
        paths: 极大真路径 P_F (顶点序列)
        threshold: 路径缩短的长度阈值 (2页核为 None)
        iterations: 吸收短路径的循环次数
    """
    original: MultiGraph
    kernel: MultiGraph
    pages: int = 2
    steps: List[KernelStep] = field(default_factory=list)
    fen: int = 0
    sets: Dict[str, List[int]] = field(default_factory=dict)
    paths: List[List[int]] = field(default_factory=list)
    threshold: Optional[int] = None
    iterations: int = 0

    def count(self, rule: KernelRule) -> int:
        return sum(1 for step in self.steps if step.rule is rule)

    @property
    def vertex_bound(self) -> int:
        """2页核的顶点上界 12k-8"""
        a, b = TWO_PAGE_VERTEX_BOUND
        return a * self.fen + b

    @property
    def edge_bound(self) -> int:
        """2页核的边上界 14k-9"""
        a, b = TWO_PAGE_EDGE_BOUND
        return a * self.fen + b

    def within_bounds(self) -> bool:
        """2页核是否满足大小上界 (fen = 0 时核必为空图)"""
        if self.fen == 0:
            return self.kernel.n == 0
        return self.kernel.n <= self.vertex_bound and self.kernel.m <= self.edge_bound

    def to_dict(self) -> Dict[str, object]:
        """转换为字典"""
        return {
            "pages": self.pages,
            "fen": self.fen,
            "original": {"n": self.original.n, "m": self.original.m},
            "kernel": {"n": self.kernel.n, "m": self.kernel.m},
            "rules": {rule.value: self.count(rule) for rule in KernelRule},
            "sets": {name: sorted(values) for name, values in sorted(self.sets.items())},
            "paths": [list(path) for path in self.paths],
            "threshold": self.threshold,
            "iterations": self.iterations,
            "steps": [step.to_dict() for step in self.steps],
        }


class WorkingGraph:
    """
    可就地修改的多重图, 边编号在修改过程中保持不变

    Args:
        graph: 初始图
    """

    def __init__(self, graph: MultiGraph):
        self.vertices: Set[int] = set(graph.vertices)
        self.ends: Dict[int, Tuple[int, int]] = {e.id: (e.u, e.v) for e in graph.edges}
        self.incident: Dict[int, Set[int]] = {v: set(graph.incident(v)) for v in graph.vertices}

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def other(self, edge_id: int, v: int) -> int:
        u, w = self.ends[edge_id]
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownElementError("边端点", v, "WorkingGraph.other")

    def edges_of(self, v: int) -> List[int]:
        return sorted(self.incident[v])

    def remove_vertex(self, v: int) -> List[int]:
        """删除顶点及其关联边, 返回被删的边"""
        removed = self.edges_of(v)
        for edge_id in removed:
            w = self.other(edge_id, v)
            self.incident[w].discard(edge_id)
            del self.ends[edge_id]
        del self.incident[v]
        self.vertices.discard(v)
        return removed

    def contract(self, edge_id: int, kept: int) -> Tuple[int, List[int]]:
        """
        收缩一条边, 另一端并入 kept

        Returns:
            Tuple[int, List[int]]: 被并入的顶点与改接的边

        Raises:
            ContractViolationError: 收缩会产生自环
        """
        gone = self.other(edge_id, kept)
        moved = [e for e in self.edges_of(gone) if e != edge_id]
        if any(self.other(e, gone) == kept for e in moved):
            raise ContractViolationError(f"收缩边 {edge_id} 会产生自环", "WorkingGraph.contract")
        self.incident[kept].discard(edge_id)
        del self.ends[edge_id]
        for e in moved:
            self.ends[e] = (kept, self.other(e, gone))
            self.incident[kept].add(e)
        del self.incident[gone]
        self.vertices.discard(gone)
        return gone, moved

    def apply(self, step: KernelStep) -> None:
        """回放一个步骤"""
        if step.is_contraction:
            if step.edge is None or step.kept is None:
                raise ContractViolationError("收缩步骤缺少边或保留顶点", "WorkingGraph.apply")
            self.contract(step.edge, step.kept)
        else:
            self.remove_vertex(step.gone)

    def to_graph(self) -> MultiGraph:
        return MultiGraph(self.vertices, [Edge(e, u, v) for e, (u, v) in sorted(self.ends.items())])


@dataclass(frozen=True)
class Chain:
    """
    度2顶点链: 从 start 出发经过内部顶点到达 end, 首尾可以相同

    Attributes:
        start: 起点
        inner: 内部顶点
        end: 终点
        edges: 沿链的边, 比内部顶点多一条
    """
    start: int
    inner: Tuple[int, ...]
    end: int
    edges: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertices(self) -> List[int]:
        return [self.start, *self.inner, self.end]


def find_chains(work: WorkingGraph, anchors: Iterable[int] = ()) -> List[Chain]:
    """
    度2顶点链: 内部顶点度数为2且不在 anchors 中, 至少一个内部顶点

    没有端点的纯环以最小顶点为首尾。结果按最小内部顶点排序。

    Args:
        work: 图
        anchors: 额外的端点集合
    """
    stops = {v for v in work.vertices if work.degree(v) != 2} | set(anchors)
    visited: Set[int] = set()
    chains: List[Chain] = []

    def walk(start: int, first: int) -> Chain:
        inner: List[int] = []
        edges = [first]
        current = work.other(first, start)
        while current not in stops and current != start:
            inner.append(current)
            step = next(e for e in work.edges_of(current) if e != edges[-1])
            edges.append(step)
            current = work.other(step, current)
        visited.update(edges)
        return Chain(start, tuple(inner), current, tuple(edges))

    for start in sorted(stops & work.vertices):
        for first in work.edges_of(start):
            if first not in visited:
                chain = walk(start, first)
                if chain.inner:
                    chains.append(chain)
    for start in sorted(work.vertices):
        loose = [e for e in work.edges_of(start) if e not in visited]
        if loose:
            chains.append(walk(start, loose[0]))
    chains.sort(key=lambda chain: min(chain.inner) if chain.inner else chain.start)
    return chains
