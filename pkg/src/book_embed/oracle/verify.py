"""
书嵌入与见证校验

书嵌入合法当且仅当书脊顺序恰好是全部顶点的排列, 页码在 1..ℓ 之内, 且同一页上
没有两条边严格交错 (u ≺ w ≺ v ≺ x)。共享端点的边与平行边不冲突。
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..common.exceptions import EmbeddingIntegrityError
from ..graph.models import BookEmbedding, Edge, HamiltonianWitness, MultiGraph
from ..planarity.embedding import planar_with_cycle

# 边在书脊上的区间 (左端位置, 右端位置)
Span = Tuple[int, int]


def span(edge: Edge, position: Dict[int, int]) -> Span:
    a, b = position[edge.u], position[edge.v]
    return (a, b) if a <= b else (b, a)


def interleaves(first: Span, second: Span) -> bool:
    """严格交错"""
    a, b = first
    c, d = second
    return a < c < b < d or c < a < d < b


def crossing_pairs(edges: Iterable[Edge], position: Dict[int, int]) -> List[Tuple[int, int]]:
    """在给定书脊顺序下严格交错的边对 (冲突图的边)"""
    spans = sorted((span(edge, position), edge.id) for edge in edges)
    pairs: List[Tuple[int, int]] = []
    for i, (first, e1) in enumerate(spans):
        for second, e2 in spans[i + 1:]:
            if second[0] >= first[1]:
                break
            if interleaves(first, second):
                pairs.append((min(e1, e2), max(e1, e2)))
    return sorted(pairs)


def embedding_problems(graph: MultiGraph, embedding: BookEmbedding, pages: Optional[int] = 2) -> List[str]:
    """
    列出书嵌入的全部问题

    Args:
        graph: 多重图
        embedding: 书嵌入
        pages: 允许的页数 ℓ, None 表示不限制

    Returns:
        List[str]: 问题描述, 合法时为空
    """
    problems: List[str] = []
    if sorted(embedding.order) != sorted(graph.vertices) or len(set(embedding.order)) != len(embedding.order):
        problems.append("书脊顺序不是全部顶点的排列")
        return problems
    if set(embedding.pages) != set(graph.edge_ids):
        problems.append("页分配没有恰好覆盖全部边")
        return problems
    for edge_id, page in sorted(embedding.pages.items()):
        if page < 1 or (pages is not None and page > pages):
            problems.append(f"边 {edge_id} 的页码 {page} 超出范围")
    if problems:
        return problems

    position = embedding.position()
    by_page: Dict[int, List[Edge]] = {}
    for edge in graph.edges:
        by_page.setdefault(embedding.pages[edge.id], []).append(edge)
    for page, edges in sorted(by_page.items()):
        for e1, e2 in crossing_pairs(edges, position):
            problems.append(f"第 {page} 页上的边 {e1} 与 {e2} 交错")
    return problems


def verify_embedding(graph: MultiGraph, embedding: BookEmbedding, pages: Optional[int] = 2) -> bool:
    """书嵌入是否合法"""
    return not embedding_problems(graph, embedding, pages)


def check_embedding(graph: MultiGraph, embedding: BookEmbedding, pages: Optional[int] = 2) -> None:
    """
    校验书嵌入

    Raises:
        EmbeddingIntegrityError: 书嵌入不合法, 消息中列出第一个问题
    """
    problems = embedding_problems(graph, embedding, pages)
    if problems:
        more = f" (另有 {len(problems) - 1} 个问题)" if len(problems) > 1 else ""
        raise EmbeddingIntegrityError(problems[0] + more, "请检查书脊顺序与页分配是否来自同一个图")


def verify_witness(graph: MultiGraph, witness: HamiltonianWitness) -> bool:
    """
    子哈密顿见证是否合法: 全部顶点的循环排列, 且 G 加上 H 的边后为平面图

    Args:
        graph: 多重图
        witness: 见证

    Returns:
        bool: 是否合法
    """
    cycle: Sequence[int] = witness.cycle
    if len(set(cycle)) != len(cycle) or sorted(cycle) != sorted(graph.vertices):
        return False
    if len(cycle) < 3:
        return True
    return planar_with_cycle(graph, cycle)
