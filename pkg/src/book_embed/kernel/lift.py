"""
核化记录的回放与嵌入提升

回放: 在输入图上依次应用记录中的规则, 得到的图应与核完全相同。
提升: 逆序撤销规则。悬挂点放回邻居之后; 每次收缩都被撤销为对改接边的一次细分,
新顶点紧贴保留顶点放置, 保留顶点的另一条边若嵌套在改接边之内, 新顶点放在远离
改接边另一端的一侧, 否则放在靠近的一侧。两条新边沿用改接边的页。
"""

import logging
from typing import Dict, List, Set, Tuple

from ..common.exceptions import ContractViolationError, InternalInconsistencyError
from ..graph.models import BookEmbedding, MultiGraph
from ..oracle.verify import embedding_problems
from .models import KernelStep, KernelTrace, WorkingGraph

logger = logging.getLogger(__name__)


def replay_trace(graph: MultiGraph, trace: KernelTrace) -> MultiGraph:
    """
    在图上回放核化记录

    Args:
        graph: 输入图
        trace: 核化记录

    Returns:
        MultiGraph: 回放结果
    """
    work = WorkingGraph(graph)
    for step in trace.steps:
        work.apply(step)
    return work.to_graph()


class _Lifter:
    """逆序撤销规则时维护的书脊顺序, 页分配与关联关系"""

    def __init__(self, kernel: MultiGraph, embedding: BookEmbedding):
        self.order: List[int] = list(embedding.order)
        self.pages: Dict[int, int] = dict(embedding.pages)
        self.ends: Dict[int, Tuple[int, int]] = {e.id: (e.u, e.v) for e in kernel.edges}
        self.incident: Dict[int, Set[int]] = {v: set(kernel.incident(v)) for v in kernel.vertices}

    def _other(self, edge_id: int, v: int) -> int:
        u, w = self.ends[edge_id]
        return w if u == v else u

    def undo_pendant(self, step: KernelStep) -> None:
        self.incident[step.gone] = set()
        if step.kept is None or step.edge is None:
            self.order.append(step.gone)
            return
        self.order.insert(self.order.index(step.kept) + 1, step.gone)
        self.ends[step.edge] = (step.kept, step.gone)
        self.incident[step.kept].add(step.edge)
        self.incident[step.gone].add(step.edge)
        self.pages[step.edge] = 1

    def undo_contraction(self, step: KernelStep) -> None:
        kept, gone, edge, moved = step.kept, step.gone, step.edge, step.moved
        if kept is None or edge is None or moved is None:
            raise ContractViolationError("收缩步骤缺少边信息", "lift_embedding")

        far = self._other(moved, kept)
        rest = [e for e in self.incident[kept] if e != moved]
        position = {v: i for i, v in enumerate(self.order)}
        low, high = sorted((position[kept], position[far]))
        nested = any(low < position[self._other(e, kept)] < high for e in rest)

        toward = position[far] > position[kept]
        after = toward != nested
        self.order.insert(position[kept] + (1 if after else 0), gone)

        self.ends[edge] = (kept, gone)
        self.ends[moved] = (gone, far)
        self.incident[kept].discard(moved)
        self.incident[kept].add(edge)
        self.incident[gone] = {edge, moved}
        self.pages[edge] = self.pages[moved]


def lift_embedding(trace: KernelTrace, embedding: BookEmbedding) -> BookEmbedding:
    """
    把核的书嵌入提升为输入图的书嵌入

    Args:
        trace: 核化记录
        embedding: 核的书嵌入

    Returns:
        BookEmbedding: 输入图的书嵌入, 页数不超过 max(核嵌入页数, 1)

    Raises:
        ContractViolationError: 嵌入不属于该核
        InternalInconsistencyError: 提升结果不合法
    """
    kernel = trace.kernel
    if sorted(embedding.order) != sorted(kernel.vertices) or set(embedding.pages) != set(kernel.edge_ids):
        raise ContractViolationError("书嵌入的顶点或边与核不一致", "lift_embedding")

    lifter = _Lifter(kernel, embedding)
    for step in reversed(trace.steps):
        if step.is_contraction:
            lifter.undo_contraction(step)
        else:
            lifter.undo_pendant(step)

    lifted = BookEmbedding(tuple(lifter.order), dict(sorted(lifter.pages.items())))
    pages = max(embedding.page_count, 1)
    problems = embedding_problems(trace.original, lifted, pages)
    if problems:
        raise InternalInconsistencyError(f"提升后的书嵌入不合法: {problems[0]}", "lift_embedding")
    logger.debug("提升 %d 个步骤, 得到 %d 个顶点的 %d 页嵌入", len(trace.steps), len(lifted.order), pages)
    return lifted
