"""
球面切分数据模型

子曲线由端点对与所在面刻画, 弱套索是子曲线构成的单一闭曲线。
分解的每条弧记录其一侧的骨架边集合与分隔两侧的套索。
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

from ..common.exceptions import ContractViolationError, UnknownElementError
from ..graph.models import MultiGraph
from ..planarity.models import CombinatorialEmbedding


@dataclass(frozen=True, order=True)
class Subcurve:
    """
    套索中穿过一个面的一段曲线

    Attributes:
        low: 较小的端点
        high: 较大的端点
        face: 所在面的编号 (或P节点中的边界标签)
    """
    low: Any
    high: Any
    face: Hashable

    def __post_init__(self) -> None:
        if not self.low < self.high:
            raise ContractViolationError(f"子曲线端点必须满足 low < high: {self.low}, {self.high}", "Subcurve")

    @classmethod
    def between(cls, u: Any, v: Any, face: Hashable) -> "Subcurve":
        """由无序端点对构造"""
        return cls(u, v, face) if u < v else cls(v, u, face)

    def other(self, x: Any) -> Any:
        if x == self.low:
            return self.high
        if x == self.high:
            return self.low
        raise UnknownElementError("子曲线端点", x, "Subcurve.other")

    def __repr__(self) -> str:
        return f"c({self.low},{self.high}|{self.face})"


# 套索遍历中的一步: 从顶点出发沿子曲线走到另一端
WalkStep = Tuple[Any, Subcurve]


@dataclass(frozen=True)
class WeakNoose:
    """
    弱套索: 子曲线构成的单一闭曲线

    规范遍历从编号最小的边界顶点出发, 先走 (另一端点, 面) 较小的那条子曲线。

    Attributes:
        subcurves: 子曲线集合
    """
    subcurves: FrozenSet[Subcurve]

    def __post_init__(self) -> None:
        problem = _noose_problem(self.subcurves)
        if problem:
            raise ContractViolationError(problem, "WeakNoose")

    @cached_property
    def vertices(self) -> FrozenSet[Any]:
        """边界顶点集合 m(O)"""
        return frozenset(x for c in self.subcurves for x in (c.low, c.high))

    def __len__(self) -> int:
        return len(self.subcurves)

    @cached_property
    def walk(self) -> Tuple[WalkStep, ...]:
        """规范遍历"""
        incident: Dict[Any, List[Subcurve]] = {}
        for curve in self.subcurves:
            incident.setdefault(curve.low, []).append(curve)
            incident.setdefault(curve.high, []).append(curve)

        start = min(self.vertices)
        first = min(incident[start], key=lambda c: (c.other(start), c.face))
        steps: List[WalkStep] = []
        vertex, curve = start, first
        while True:
            steps.append((vertex, curve))
            vertex = curve.other(vertex)
            if vertex == start:
                return tuple(steps)
            curve = next(c for c in incident[vertex] if c != curve)

    def cyclic_order(self) -> Tuple[Any, ...]:
        """边界顶点的循环顺序"""
        return tuple(vertex for vertex, _ in self.walk)

    def faces(self) -> List[Hashable]:
        return sorted(c.face for c in self.subcurves)

    def visits_faces_once(self) -> bool:
        """每个面至多被穿过一次"""
        faces = self.faces()
        return len(faces) == len(set(faces))

    def __repr__(self) -> str:
        return "O{" + ", ".join(repr(c) for c in sorted(self.subcurves)) + "}"


def _noose_problem(subcurves: FrozenSet[Subcurve]) -> Optional[str]:
    """返回不构成单一闭曲线的原因, 合法时返回 None"""
    if not subcurves:
        return "套索不能为空"
    degree: Dict[Any, int] = {}
    neighbours: Dict[Any, List[Any]] = {}
    for curve in subcurves:
        for x in (curve.low, curve.high):
            degree[x] = degree.get(x, 0) + 1
        neighbours.setdefault(curve.low, []).append(curve.high)
        neighbours.setdefault(curve.high, []).append(curve.low)
    if any(d != 2 for d in degree.values()):
        return "每个边界顶点必须恰好关联两条子曲线"

    start = next(iter(degree))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in neighbours[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(degree):
        return "子曲线构成了多条闭曲线"
    return None


def try_noose(subcurves: Iterable[Subcurve]) -> Optional[WeakNoose]:
    """合法时构造弱套索, 否则返回 None"""
    frozen = frozenset(subcurves)
    if _noose_problem(frozen):
        return None
    return WeakNoose(frozen)


@dataclass(frozen=True)
class DecompositionArc:
    """
    分解树的一条弧

    Attributes:
        id: 弧编号
        edges: 远离参考边一侧的骨架边
        noose: 分隔两侧的套索
        children: 子弧 (叶弧为空)
        leaf_edge: 叶弧对应的骨架边
    """
    id: int
    edges: FrozenSet[int]
    noose: WeakNoose
    children: Tuple[int, ...] = ()
    leaf_edge: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return self.leaf_edge is not None

    @property
    def middle_set(self) -> FrozenSet[Any]:
        """中间集 mid(a), 即套索的边界顶点"""
        return self.noose.vertices


@dataclass
class SphereCutDecomposition:
    """
    骨架的球面切分分解, 以参考边为根

    Attributes:
        skeleton: 骨架 (含参考边)
        embedding: 骨架的固定嵌入
        reference: 参考边
        arcs: 弧编号 -> 弧
        root_arc: 除参考边外全部边对应的弧
        plans: 内部弧编号 -> 由子弧套索得到该弧套索的异或方案
    """
    skeleton: MultiGraph
    embedding: CombinatorialEmbedding
    reference: int
    arcs: Dict[int, DecompositionArc]
    root_arc: int
    plans: Dict[int, Any] = field(default_factory=dict)

    def arc(self, arc_id: int) -> DecompositionArc:
        try:
            return self.arcs[arc_id]
        except KeyError:
            raise UnknownElementError("分解弧", arc_id, "SphereCutDecomposition.arc") from None

    @property
    def width(self) -> int:
        """宽度: 所有弧中间集大小的最大值"""
        return max(len(arc.middle_set) for arc in self.arcs.values())

    def inner_nodes(self) -> List[Tuple[int, int, int]]:
        """自底向上的内部节点 (父弧, 左子弧, 右子弧)"""
        ordered: List[Tuple[int, int, int]] = []
        stack: List[Tuple[int, bool]] = [(self.root_arc, False)]
        while stack:
            arc_id, expanded = stack.pop()
            arc = self.arc(arc_id)
            if arc.is_leaf:
                continue
            if expanded:
                left, right = arc.children
                ordered.append((arc_id, left, right))
                continue
            stack.append((arc_id, True))
            for child in reversed(arc.children):
                stack.append((child, False))
        return ordered

    def leaves(self) -> Dict[int, int]:
        """骨架边 -> 叶弧编号"""
        return {arc.leaf_edge: arc.id for arc in self.arcs.values() if arc.leaf_edge is not None}

    def to_dict(self) -> Dict[str, object]:
        return {
            "reference": self.reference,
            "root_arc": self.root_arc,
            "width": self.width,
            "arcs": [
                {
                    "id": arc.id,
                    "edges": sorted(arc.edges),
                    "children": list(arc.children),
                    "noose": [[repr(c.low), repr(c.high), repr(c.face)] for c in sorted(arc.noose.subcurves)],
                }
                for arc in sorted(self.arcs.values(), key=lambda a: a.id)
            ],
        }
