"""
暴力求解器

枚举书脊顺序, 在冲突图上判断 ℓ 着色。书脊顺序在循环旋转与反转下等价, 因此固定最小
顶点在首位, 并要求第二个顶点小于最后一个顶点。2页枚举在加入每个顶点时维护带奇偶性
的并查集, 冲突图一出现奇圈就剪枝。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..common.constants import DEFAULT_MULTI_PAGE_ORACLE_CAP, DEFAULT_ORACLE_CAP
from ..common.exceptions import ContractViolationError, OracleCapError
from ..graph.models import BookEmbedding, MultiGraph
from .verify import crossing_pairs, interleaves, span

logger = logging.getLogger(__name__)


def pages_given_order(graph: MultiGraph, order: Sequence[int], pages: int = 2) -> Optional[Dict[int, int]]:
    """
    固定书脊顺序时的页分配

    Args:
        graph: 多重图
        order: 书脊顺序
        pages: 页数 ℓ

    Returns:
        Optional[Dict[int, int]]: 边编号 -> 页码; 不可行时返回 None

    Raises:
        ContractViolationError: order 不是顶点的排列或 pages < 1
    """
    if len(set(order)) != len(order) or sorted(order) != sorted(graph.vertices):
        raise ContractViolationError("书脊顺序不是全部顶点的排列", "pages_given_order")
    if pages < 1:
        raise ContractViolationError(f"页数必须为正: {pages}", "pages_given_order")

    position = {v: i for i, v in enumerate(order)}
    conflicts = nx.Graph()
    conflicts.add_nodes_from(graph.edge_ids)
    conflicts.add_edges_from(crossing_pairs(graph.edges, position))

    if conflicts.number_of_edges() == 0:
        return {e: 1 for e in graph.edge_ids}
    if pages == 1:
        return None
    if pages == 2:
        if not nx.is_bipartite(conflicts):
            return None
        colors = nx.bipartite.color(conflicts)
        return {e: colors[e] + 1 for e in graph.edge_ids}
    return _color(conflicts, pages)


def _color(conflicts: nx.Graph, pages: int) -> Optional[Dict[int, int]]:
    """按度数从大到小回溯着色"""
    nodes = sorted(conflicts.nodes, key=lambda e: (-conflicts.degree(e), e))
    assignment: Dict[int, int] = {}

    def place(index: int) -> bool:
        if index == len(nodes):
            return True
        edge = nodes[index]
        used = {assignment[other] for other in conflicts.neighbors(edge) if other in assignment}
        # 新开一页时只试编号最小的空页
        limit = min(pages, max(assignment.values(), default=0) + 1)
        for page in range(1, limit + 1):
            if page in used:
                continue
            assignment[edge] = page
            if place(index + 1):
                return True
            del assignment[edge]
        return False

    return dict(sorted(assignment.items())) if place(0) else None


class _ParityUnionFind:
    """带奇偶性的并查集, 记录两条边是否必须在不同页"""

    def __init__(self, parent: Optional[Dict[int, Tuple[int, int]]] = None):
        self.parent: Dict[int, Tuple[int, int]] = dict(parent or {})

    def copy(self) -> "_ParityUnionFind":
        return _ParityUnionFind(self.parent)

    def find(self, x: int) -> Tuple[int, int]:
        parity = 0
        while x in self.parent:
            x, step = self.parent[x]
            parity ^= step
        return x, parity

    def separate(self, a: int, b: int) -> bool:
        """要求 a, b 异页, 矛盾时返回 False"""
        root_a, parity_a = self.find(a)
        root_b, parity_b = self.find(b)
        if root_a == root_b:
            return parity_a != parity_b
        self.parent[root_b] = (root_a, parity_a ^ parity_b ^ 1)
        return True


class _OrderSearch:
    """固定首顶点的2页书脊顺序深度优先搜索"""

    def __init__(self, graph: MultiGraph):
        self.graph = graph
        self.vertices = sorted(graph.vertices)
        self.visited = 0

    def run(self, prefix: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        position: Dict[int, int] = {}
        placed_edges: List[Tuple[Tuple[int, int], int]] = []
        parity = _ParityUnionFind()
        for v in prefix:
            parity = self._place(v, position, placed_edges, parity)
            if parity is None:
                return None
        return self._search(list(prefix), position, placed_edges, parity)

    def _place(self, v, position, placed_edges, parity) -> Optional[_ParityUnionFind]:
        position[v] = len(position)
        fresh = []
        for edge_id in self.graph.incident(v):
            other = self.graph.edge(edge_id).other(v)
            if other in position and other != v:
                fresh.append((span(self.graph.edge(edge_id), position), edge_id))
        parity = parity.copy()
        for new_span, new_id in fresh:
            for old_span, old_id in placed_edges:
                if interleaves(new_span, old_span) and not parity.separate(new_id, old_id):
                    del position[v]
                    return None
        placed_edges.extend(fresh)
        return parity

    def _search(self, order, position, placed_edges, parity) -> Optional[Tuple[int, ...]]:
        self.visited += 1
        if len(order) == len(self.vertices):
            if len(order) > 2 and order[1] > order[-1]:
                return None
            return tuple(order)
        for v in [v for v in self.vertices if v not in position]:
            saved = len(placed_edges)
            child = self._place(v, position, placed_edges, parity)
            if child is None:
                continue
            order.append(v)
            found = self._search(order, position, placed_edges, child)
            if found is not None:
                return found
            order.pop()
            del position[v]
            del placed_edges[saved:]
        return None


def _require_cap(graph: MultiGraph, cap: int) -> None:
    if graph.n > cap:
        raise OracleCapError(graph.n, cap)


def brute_force_subham(
    graph: MultiGraph,
    cap: int = DEFAULT_ORACLE_CAP,
    parallel: bool = False,
    max_workers: int = 4,
) -> Optional[BookEmbedding]:
    """
    穷举判断是否存在2页书嵌入

    Args:
        graph: 多重图
        cap: 顶点数上限
        parallel: 是否按第二个顶点划分前缀并行
        max_workers: 线程池大小

    Returns:
        Optional[BookEmbedding]: 找到的2页书嵌入; 不存在时返回 None

    Raises:
        OracleCapError: 顶点数超过上限
    """
    _require_cap(graph, cap)
    if graph.n <= 2:
        return BookEmbedding(tuple(sorted(graph.vertices)), {e: 1 for e in graph.edge_ids})

    search = _OrderSearch(graph)
    first = search.vertices[0]
    # 第二个顶点若是最大顶点, 反转后必然更小, 可以跳过
    prefixes = [(first, v) for v in search.vertices[1:-1]]

    order: Optional[Tuple[int, ...]] = None
    if parallel and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(lambda p: _OrderSearch(graph).run(p), prefixes))
        order = next((found for found in results if found is not None), None)
    else:
        for prefix in prefixes:
            order = search.run(prefix)
            if order is not None:
                break
        logger.debug("2页暴力枚举: 访问 %d 个搜索节点", search.visited)

    if order is None:
        return None
    assignment = pages_given_order(graph, order, 2)
    if assignment is None:
        return None
    return BookEmbedding(order, assignment)


def _orders(vertices: List[int]) -> Iterator[Tuple[int, ...]]:
    """固定首顶点并去掉反转的全部书脊顺序"""
    if len(vertices) <= 2:
        yield tuple(vertices)
        return
    first, rest = vertices[0], vertices[1:]
    for tail in permutations(rest):
        if tail[0] < tail[-1]:
            yield (first,) + tail


def brute_force_book_embedding(
    graph: MultiGraph,
    pages: int,
    cap: int = DEFAULT_MULTI_PAGE_ORACLE_CAP,
) -> Optional[BookEmbedding]:
    """
    穷举判断是否存在 ℓ 页书嵌入

    Args:
        graph: 多重图
        pages: 页数 ℓ
        cap: 顶点数上限

    Returns:
        Optional[BookEmbedding]: 找到的嵌入; 不存在时返回 None

    Raises:
        OracleCapError: 顶点数超过上限
    """
    _require_cap(graph, cap)
    for order in _orders(sorted(graph.vertices)):
        assignment = pages_given_order(graph, order, pages)
        if assignment is not None:
            return BookEmbedding(order, assignment)
    return None


def brute_force_book_thickness(graph: MultiGraph, cap: int = DEFAULT_MULTI_PAGE_ORACLE_CAP) -> Tuple[int, BookEmbedding]:
    """
    书厚度: 存在书嵌入的最小页数

    Returns:
        Tuple[int, BookEmbedding]: 页数与对应的嵌入 (无边时为0页)

    Raises:
        OracleCapError: 顶点数超过上限
    """
    _require_cap(graph, cap)
    if graph.m == 0:
        return 0, BookEmbedding(tuple(sorted(graph.vertices)), {})
    pages = 1
    while True:
        found = brute_force_book_embedding(graph, pages, cap)
        if found is not None:
            return pages, found
        pages += 1
