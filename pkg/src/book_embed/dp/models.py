"""
动态规划数据模型

每个表项保存一个路径系统作为见证: 若干条以穿越点或边界顶点为端点、以真实顶点为
内部点的路径, 或者一个覆盖区域内全部顶点的圈。组合类型时路径系统在公共端点处拼接,
消失的穿越点被抹平。
"""

import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

from ..common.constants import Verdict
from ..common.exceptions import InternalInconsistencyError
from ..graph.models import BookEmbedding, HamiltonianWitness
from ..types.models import Crossing, NooseType, Pair, Token, make_pair, token_key


@dataclass(frozen=True)
class PathSystem:
    """
    表项的见证路径系统

    Attributes:
        segments: 路径序列; closed 时只有一个元素, 为圈上的顶点顺序
        closed: 是否为圈
    """
    segments: Tuple[Tuple[Token, ...], ...] = ()
    closed: bool = False

    @classmethod
    def cycle(cls, vertices: Tuple[Any, ...]) -> "PathSystem":
        return cls((tuple(vertices),), closed=True)

    @property
    def endpoints(self) -> FrozenSet[Pair]:
        if self.closed:
            return frozenset()
        return frozenset(make_pair(seg[0], seg[-1]) for seg in self.segments)

    def interior(self) -> List[Token]:
        """路径内部点 (圈则为全部点)"""
        if self.closed:
            return list(self.segments[0])
        return [token for seg in self.segments for token in seg[1:-1]]

    def relabel(self, crossings: Mapping[Crossing, Crossing]) -> "PathSystem":
        """按映射改写穿越点, 顶点不变"""
        if not crossings:
            return self
        segments = tuple(
            tuple(crossings.get(t, t) if isinstance(t, Crossing) else t for t in seg)
            for seg in self.segments
        )
        return PathSystem(segments, self.closed)

    def map_vertices(self, vertex_map: Mapping[Any, Any]) -> "PathSystem":
        """按映射改写顶点记号"""
        segments = tuple(
            tuple(t if isinstance(t, Crossing) else vertex_map.get(t, t) for t in seg)
            for seg in self.segments
        )
        return PathSystem(segments, self.closed)

    def merge(self, other: "PathSystem") -> "PathSystem":
        """
        在公共端点处拼接两个路径系统, 抹平变成内部点的穿越点

        Raises:
            InternalInconsistencyError: 拼接后出现度数大于2的点或多个圈
        """
        if self.closed or other.closed:
            if (self.closed and other.segments) or (other.closed and self.segments):
                raise InternalInconsistencyError("圈只能与空路径系统拼接", "PathSystem.merge")
            return self if self.closed else other
        return _join(self.segments + other.segments)

    def cycle_vertices(self) -> Tuple[Any, ...]:
        """
        圈上的顶点, 从最小顶点出发

        Raises:
            InternalInconsistencyError: 不是圈
        """
        if not self.closed:
            raise InternalInconsistencyError("路径系统不是圈", "PathSystem.cycle_vertices")
        vertices = [t for t in self.segments[0] if not isinstance(t, Crossing)]
        start = vertices.index(min(vertices))
        return tuple(vertices[start:] + vertices[:start])

    def to_dict(self) -> Dict[str, object]:
        return {
            "closed": self.closed,
            "segments": [[repr(t) for t in seg] for seg in self.segments],
        }


def _join(segments: Tuple[Tuple[Token, ...], ...]) -> PathSystem:
    edges: List[Tuple[Token, Token]] = []
    adjacency: Dict[Token, List[int]] = defaultdict(list)
    for seg in segments:
        for a, b in zip(seg, seg[1:]):
            adjacency[a].append(len(edges))
            adjacency[b].append(len(edges))
            edges.append((a, b))
    if any(len(ids) > 2 for ids in adjacency.values()):
        raise InternalInconsistencyError("路径拼接出现度数大于2的点", "PathSystem.merge")

    used = set()

    def walk(start: Token, first_edge: int) -> List[Token]:
        sequence = [start]
        token, edge_id = start, first_edge
        while edge_id is not None:
            used.add(edge_id)
            a, b = edges[edge_id]
            token = b if a == token else a
            sequence.append(token)
            edge_id = next((e for e in adjacency[token] if e not in used), None)
        return sequence

    result: List[Tuple[Token, ...]] = []
    for token in sorted(adjacency, key=token_key):
        ids = adjacency[token]
        if len(ids) == 1 and ids[0] not in used:
            sequence = walk(token, ids[0])
            inner = [t for t in sequence[1:-1] if not isinstance(t, Crossing)]
            result.append(tuple([sequence[0]] + inner + [sequence[-1]]))

    if len(used) == len(edges):
        return PathSystem(tuple(result))
    if result:
        raise InternalInconsistencyError("路径拼接同时产生了路径与圈", "PathSystem.merge")
    start = min((t for t in adjacency if not isinstance(t, Crossing)), key=token_key)
    cycle = walk(start, adjacency[start][0])[:-1]
    if len(used) != len(edges):
        raise InternalInconsistencyError("路径拼接产生了多个圈", "PathSystem.merge")
    return PathSystem.cycle(tuple(t for t in cycle if not isinstance(t, Crossing)))


class TypeTable:
    """
    类型表: 类型 -> 见证路径系统, 先到的见证保留

    迭代顺序按类型的规范编码排序。
    """

    def __init__(self, entries: Optional[Mapping[NooseType, PathSystem]] = None):
        self._entries: Dict[NooseType, PathSystem] = {}
        for x, paths in (entries or {}).items():
            self.add(x, paths)

    def add(self, x: NooseType, paths: PathSystem) -> bool:
        """加入表项, 已存在时返回 False"""
        if x in self._entries:
            return False
        self._entries[x] = paths
        return True

    def witness(self, x: NooseType) -> PathSystem:
        try:
            return self._entries[x]
        except KeyError:
            raise InternalInconsistencyError(f"类型表中没有 {x!r}", "TypeTable.witness") from None

    def types(self) -> List[NooseType]:
        return sorted(self._entries, key=NooseType.sort_key)

    def items(self) -> Iterator[Tuple[NooseType, PathSystem]]:
        for x in self.types():
            yield x, self._entries[x]

    def __contains__(self, x: object) -> bool:
        return x in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[NooseType]:
        return iter(self.types())

    def __repr__(self) -> str:
        return f"TypeTable({len(self)} types)"


@dataclass
class SolverStats:
    """
    求解统计

    Attributes:
        timings: 阶段 -> 秒
        blocks: 块数
        spqr_nodes: 节点种类 -> 个数
        max_width: 球面切分分解的最大宽度
        largest_table: 最大类型表的大小
        p_sequences: P节点枚举的坏类型序列数
    """
    timings: Dict[str, float] = field(default_factory=dict)
    blocks: int = 0
    spqr_nodes: Dict[str, int] = field(default_factory=dict)
    max_width: int = 0
    largest_table: int = 0
    p_sequences: int = 0

    def add_time(self, phase: str, seconds: float) -> None:
        self.timings[phase] = self.timings.get(phase, 0.0) + seconds

    def timer(self, phase: str) -> "_PhaseTimer":
        return _PhaseTimer(self, phase)

    def count_node(self, kind: str) -> None:
        self.spqr_nodes[kind] = self.spqr_nodes.get(kind, 0) + 1

    def record_table(self, size: int) -> None:
        self.largest_table = max(self.largest_table, size)

    def to_dict(self) -> Dict[str, object]:
        return {
            "timings": {k: round(v, 6) for k, v in sorted(self.timings.items())},
            "blocks": self.blocks,
            "spqr_nodes": dict(sorted(self.spqr_nodes.items())),
            "max_width": self.max_width,
            "largest_table": self.largest_table,
            "p_sequences": self.p_sequences,
        }


class _PhaseTimer:
    """累计一个阶段耗时的上下文管理器"""

    def __init__(self, stats: SolverStats, phase: str):
        self.stats = stats
        self.phase = phase
        self.start = 0.0

    def __enter__(self) -> "_PhaseTimer":
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.stats.add_time(self.phase, time.perf_counter() - self.start)


@dataclass
class DecisionResult:
    """
    判定结果

    Attributes:
        verdict: 是否存在2页书嵌入
        witness: 子哈密顿见证 (YES 时)
        embedding: 经过校验的2页书嵌入 (YES 时)
        stats: 求解统计
    """
    verdict: Verdict
    witness: Optional[HamiltonianWitness] = None
    embedding: Optional[BookEmbedding] = None
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.YES

    def to_dict(self) -> Dict[str, object]:
        return {
            "verdict": self.verdict.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "embedding": self.embedding.to_dict() if self.embedding else None,
            "stats": self.stats.to_dict(),
        }
