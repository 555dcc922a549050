"""
球面切分分解构建

从参考边以外的全部骨架边出发, 每次剥离一条边: 剩余边集的套索必须合法, 且父套索可由
剩余套索、被剥离边的套索与至多两个无边三角形经异或得到。优先选择剩余套索最小的边,
走不通时回溯, 扩展次数受上限约束。得到的分解树是毛毛虫形。
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from ..common.constants import SPHERECUT_SEARCH_LIMIT
from ..common.exceptions import ContractViolationError, DecompositionError, WidthCapExceededError
from ..graph.models import MultiGraph
from ..graph.operations import is_connected
from ..planarity.models import CombinatorialEmbedding
from .models import DecompositionArc, SphereCutDecomposition, WeakNoose
from .nooses import leaf_noose, noose_from_edges
from .plan import XorPlan, plan_xor

logger = logging.getLogger(__name__)


@dataclass
class _Peel:
    """一次剥离: 父边集 -> 剩余边集 + 单边"""
    remaining: FrozenSet[int]
    noose: WeakNoose
    edge: int
    plan: XorPlan


class SphereCutBuilder:
    """
    毛毛虫形球面切分分解的回溯构建器

    Args:
        skeleton: 二连通平面骨架 (含参考边)
        embedding: 骨架的组合嵌入
        reference: 参考边
        search_limit: 最大扩展次数
    """

    def __init__(
        self,
        skeleton: MultiGraph,
        embedding: CombinatorialEmbedding,
        reference: int,
        search_limit: int = SPHERECUT_SEARCH_LIMIT,
    ):
        self.skeleton = skeleton
        self.embedding = embedding
        self.reference = reference
        self.search_limit = search_limit
        self.expansions = 0
        self._leaf_nooses: Dict[int, WeakNoose] = {
            edge_id: leaf_noose(embedding, edge_id) for edge_id in skeleton.edge_ids
        }

    def _candidates(self, edges: FrozenSet[int], noose: WeakNoose) -> List[_Peel]:
        """可剥离的边, 按剩余套索大小与边编号排序"""
        self.expansions += 1
        if self.expansions > self.search_limit:
            raise DecompositionError(f"球面切分搜索超过 {self.search_limit} 次扩展", "spherecut")

        found: List[_Peel] = []
        boundary = noose.vertices
        for edge_id in sorted(edges):
            edge = self.skeleton.edge(edge_id)
            if edge.u not in boundary and edge.v not in boundary:
                continue
            remaining = edges - {edge_id}
            child = noose_from_edges(self.embedding, remaining)
            if child is None:
                continue
            plan = plan_xor(noose, child, self._leaf_nooses[edge_id])
            if plan is None:
                continue
            found.append(_Peel(remaining, child, edge_id, plan))
        found.sort(key=lambda peel: (len(peel.noose), peel.edge))
        return found

    def search(self, edges: FrozenSet[int], noose: WeakNoose) -> List[_Peel]:
        """
        回溯搜索完整的剥离序列

        Raises:
            DecompositionError: 搜索失败或超过扩展上限
        """
        if len(edges) == 1:
            return []
        stack: List[Tuple[List[_Peel], int]] = [(self._candidates(edges, noose), 0)]
        chosen: List[_Peel] = []
        while stack:
            options, index = stack[-1]
            if index >= len(options):
                stack.pop()
                if chosen:
                    chosen.pop()
                continue
            stack[-1] = (options, index + 1)
            peel = options[index]
            chosen.append(peel)
            if len(peel.remaining) == 1:
                return chosen
            stack.append((self._candidates(peel.remaining, peel.noose), 0))
        raise DecompositionError("找不到毛毛虫形球面切分分解", "spherecut")

    def build(self) -> SphereCutDecomposition:
        edges = frozenset(e for e in self.skeleton.edge_ids if e != self.reference)
        root_noose = noose_from_edges(self.embedding, edges)
        if root_noose is None:
            raise DecompositionError("根弧的套索不合法", "spherecut")

        peels = self.search(edges, root_noose)
        arcs: Dict[int, DecompositionArc] = {}
        plans: Dict[int, XorPlan] = {}

        current_id = 0
        current_edges, current_noose = edges, root_noose
        for peel in peels:
            rest_id, leaf_id = len(arcs) + 1, len(arcs) + 2
            arcs[current_id] = DecompositionArc(
                id=current_id,
                edges=current_edges,
                noose=current_noose,
                children=(rest_id, leaf_id),
            )
            plans[current_id] = peel.plan
            arcs[leaf_id] = DecompositionArc(
                id=leaf_id,
                edges=frozenset({peel.edge}),
                noose=self._leaf_nooses[peel.edge],
                leaf_edge=peel.edge,
            )
            current_id, current_edges, current_noose = rest_id, peel.remaining, peel.noose

        (last,) = tuple(current_edges)
        arcs[current_id] = DecompositionArc(
            id=current_id,
            edges=current_edges,
            noose=current_noose,
            leaf_edge=last,
        )
        logger.debug("球面切分: %d 条弧, %d 次扩展", len(arcs), self.expansions)
        return SphereCutDecomposition(
            skeleton=self.skeleton,
            embedding=self.embedding,
            reference=self.reference,
            arcs=arcs,
            root_arc=0,
            plans=plans,
        )


def _require_biconnected(skeleton: MultiGraph) -> None:
    if skeleton.n < 3 or not is_connected(skeleton):
        raise ContractViolationError("骨架必须是至少3个顶点的二连通图", "build_spherecut")
    if any(True for _ in nx.articulation_points(skeleton.to_simple_networkx())):
        raise ContractViolationError("骨架不是二连通图", "build_spherecut")


def build_spherecut(
    skeleton: MultiGraph,
    embedding: CombinatorialEmbedding,
    reference: int,
    width_cap: Optional[int] = None,
    search_limit: int = SPHERECUT_SEARCH_LIMIT,
) -> SphereCutDecomposition:
    """
    构建以参考边为根的球面切分分解

    Args:
        skeleton: 二连通平面骨架
        embedding: 骨架的固定嵌入
        reference: 参考边
        width_cap: 宽度上限, None 表示不限制
        search_limit: 回溯搜索的扩展上限

    Returns:
        SphereCutDecomposition: 每条弧的套索均合法, 每个内部节点都有异或方案

    Raises:
        ContractViolationError: 骨架不是二连通图
        DecompositionError: 搜索失败
        WidthCapExceededError: 宽度超过上限
    """
    _require_biconnected(skeleton)
    skeleton.edge(reference)
    decomposition = SphereCutBuilder(skeleton, embedding, reference, search_limit).build()
    if width_cap is not None and decomposition.width > width_cap:
        raise WidthCapExceededError(decomposition.width, width_cap)
    return decomposition
