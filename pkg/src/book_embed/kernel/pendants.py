"""
悬挂点删除

反复删除度数不超过1的顶点 (含孤立点), 直到每个剩余顶点的度数至少为2。
删除这样的顶点不改变是否存在 ℓ 页书嵌入。
"""

import heapq
import logging
from typing import List, Tuple

from ..common.constants import KernelRule
from ..graph.models import MultiGraph
from .models import KernelStep, KernelTrace, WorkingGraph

logger = logging.getLogger(__name__)


def peel_into(work: WorkingGraph, steps: List[KernelStep]) -> None:
    """就地删除悬挂点, 按顶点编号从小到大处理"""
    queue = [v for v in work.vertices if work.degree(v) <= 1]
    heapq.heapify(queue)
    while queue:
        v = heapq.heappop(queue)
        if v not in work.vertices or work.degree(v) > 1:
            continue
        edges = work.edges_of(v)
        neighbour = work.other(edges[0], v) if edges else None
        work.remove_vertex(v)
        steps.append(KernelStep(KernelRule.PENDANT_DELETE, v, neighbour, edges[0] if edges else None))
        if neighbour is not None and work.degree(neighbour) <= 1:
            heapq.heappush(queue, neighbour)


def peel_pendants(graph: MultiGraph) -> Tuple[MultiGraph, KernelTrace]:
    """
    删除全部悬挂点

    Args:
        graph: 多重图

    Returns:
        Tuple[MultiGraph, KernelTrace]: 最小度至少为2的图与删除记录
    """
    work = WorkingGraph(graph)
    steps: List[KernelStep] = []
    peel_into(work, steps)
    result = work.to_graph()
    logger.debug("删除 %d 个悬挂点, 剩余 %d 个顶点", len(steps), result.n)
    return result, KernelTrace(graph, result, steps=steps)
