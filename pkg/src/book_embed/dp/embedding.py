"""
见证到书嵌入

块的子哈密顿圈在最小顶点处切开得到书脊顺序。与 H 平行的边放第1页, 其余边按它在
G ∪ H 的平面嵌入中位于 H 的哪一侧分到第1或第2页。块的嵌入沿块-割点树合并: 子块的
顺序旋转到割点开头, 其余顶点整体插在割点之后。
"""

import logging
from typing import Dict, List, Sequence

from ..common.exceptions import ContractViolationError
from ..graph.models import BookEmbedding, MultiGraph
from ..planarity.embedding import cycle_sides

logger = logging.getLogger(__name__)


def witness_to_embedding(block: MultiGraph, cycle: Sequence[int]) -> BookEmbedding:
    """
    由块的子哈密顿圈构造2页书嵌入

    Args:
        block: 二连通块或单边块
        cycle: 经过全部顶点的循环

    Returns:
        BookEmbedding: 书脊顺序为从最小顶点出发的循环

    Raises:
        ContractViolationError: cycle 不是块的顶点排列, 或 G ∪ H 非平面
    """
    if sorted(cycle) != sorted(block.vertices):
        raise ContractViolationError("见证不是块的顶点排列", "witness_to_embedding")
    if block.n <= 2:
        return BookEmbedding(tuple(sorted(block.vertices)), {e: 1 for e in block.edge_ids})

    start = list(cycle).index(min(cycle))
    order = tuple(cycle[start:]) + tuple(cycle[:start])
    sides = cycle_sides(block, order)
    k = len(order)
    along = {frozenset((order[i], order[(i + 1) % k])) for i in range(k)}
    # 与 H 平行的边 (含首尾相接的一对) 不与任何边交叉, 一律放第1页
    pages = {
        e.id: 1 if frozenset(e.ends) in along else sides[e.id]
        for e in block.edges
    }
    return BookEmbedding(order, pages)


def rotate_to(embedding: BookEmbedding, vertex: int) -> BookEmbedding:
    """循环旋转书脊使 vertex 位于开头, 页分配不变"""
    index = embedding.order.index(vertex)
    order = embedding.order[index:] + embedding.order[:index]
    return BookEmbedding(order, dict(embedding.pages))


def merge_blocks(blocks: List[MultiGraph], embeddings: List[BookEmbedding]) -> BookEmbedding:
    """
    合并一个连通分量中各块的嵌入

    从第一个块出发, 每次取与已放置顶点恰好共享一个割点的块, 把它的其余顶点插在割点之后。

    Args:
        blocks: 连通分量的块
        embeddings: 对应的嵌入

    Returns:
        BookEmbedding: 分量的嵌入

    Raises:
        ContractViolationError: 块不构成块-割点树
    """
    if not blocks:
        return BookEmbedding((), {})
    order: List[int] = list(embeddings[0].order)
    pages: Dict[int, int] = dict(embeddings[0].pages)
    placed = set(order)
    pending = list(range(1, len(blocks)))

    while pending:
        for index in pending:
            shared = placed & set(blocks[index].vertices)
            if shared:
                break
        else:
            raise ContractViolationError("块之间不连通", "merge_blocks")
        if len(shared) != 1:
            raise ContractViolationError(f"块 {index} 与已放置部分共享 {len(shared)} 个顶点", "merge_blocks")
        pending.remove(index)
        (cut,) = tuple(shared)
        rotated = rotate_to(embeddings[index], cut)
        position = order.index(cut)
        order[position + 1:position + 1] = list(rotated.order[1:])
        placed.update(rotated.order)
        pages.update(rotated.pages)

    logger.debug("合并 %d 个块, 书脊长度 %d", len(blocks), len(order))
    return BookEmbedding(tuple(order), pages)


def concatenate(embeddings: List[BookEmbedding]) -> BookEmbedding:
    """依次拼接各连通分量的嵌入"""
    order: List[int] = []
    pages: Dict[int, int] = {}
    for embedding in embeddings:
        order.extend(embedding.order)
        pages.update(embedding.pages)
    return BookEmbedding(tuple(order), pages)
