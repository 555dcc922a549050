"""
图的基本操作

连通分量、块分解、反馈边集以及收缩/细分等编辑原语。
"""

from typing import Dict, FrozenSet, List, Set

import networkx as nx
from networkx.utils import UnionFind

from ..common.exceptions import ContractViolationError
from .models import BlockDecomposition, Edge, MultiGraph


def connected_components(graph: MultiGraph) -> List[MultiGraph]:
    """
    按最小顶点编号排序的连通分量 (孤立点单独成为分量)

    Args:
        graph: 图

    Returns:
        List[MultiGraph]: 各分量, 保留原编号
    """
    simple = graph.to_simple_networkx()
    parts = [sorted(component) for component in nx.connected_components(simple)]
    parts.sort(key=lambda part: part[0])
    return [graph.induced_subgraph(part) for part in parts]


def is_connected(graph: MultiGraph) -> bool:
    return graph.n <= 1 or nx.is_connected(graph.to_simple_networkx())


def blocks(graph: MultiGraph) -> BlockDecomposition:
    """
    块分解; 平行边随其端点对所在的块

    Args:
        graph: 连通图

    Returns:
        BlockDecomposition: 块与割点

    Raises:
        ContractViolationError: 输入不连通
    """
    if not is_connected(graph):
        raise ContractViolationError("输入图不连通, 请先拆分连通分量", "blocks")
    if graph.m == 0:
        return BlockDecomposition([], frozenset())

    simple = graph.to_simple_networkx()
    owner: Dict[FrozenSet[int], int] = {}
    components = [sorted(tuple(sorted(pair)) for pair in part) for part in nx.biconnected_component_edges(simple)]
    components.sort()
    for index, pairs in enumerate(components):
        for u, v in pairs:
            owner[frozenset((u, v))] = index

    grouped: List[List[Edge]] = [[] for _ in components]
    for edge in graph.edges:
        grouped[owner[frozenset((edge.u, edge.v))]].append(edge)

    block_graphs = [MultiGraph({x for e in edges for x in (e.u, e.v)}, edges) for edges in grouped]
    return BlockDecomposition(block_graphs, frozenset(nx.articulation_points(simple)))


def feedback_edge_set(graph: MultiGraph) -> Set[int]:
    """
    最小反馈边集: 按编号顺序生成森林, 其余边即反馈边

    Returns:
        Set[int]: 边编号集合, 大小为 m - n + c
    """
    forest = UnionFind(graph.vertices)
    feedback: Set[int] = set()
    for edge in graph.edges:
        if forest[edge.u] == forest[edge.v]:
            feedback.add(edge.id)
        else:
            forest.union(edge.u, edge.v)
    return feedback


def feedback_edge_number(graph: MultiGraph) -> int:
    return len(feedback_edge_set(graph))


def contract_edge(graph: MultiGraph, edge_id: int) -> MultiGraph:
    """
    收缩一条边: 编号较大的端点并入较小的端点, 平行边保留, 自环删除

    Raises:
        UnknownElementError: 边不存在
    """
    edge = graph.edge(edge_id)
    keep, gone = edge.ends
    edges: List[Edge] = []
    for other in graph.edges:
        u = keep if other.u == gone else other.u
        v = keep if other.v == gone else other.v
        if u != v:
            edges.append(Edge(other.id, u, v))
    return MultiGraph([x for x in graph.vertices if x != gone], edges)


def subdivide_edge(graph: MultiGraph, edge_id: int) -> MultiGraph:
    """
    细分一条边: 原边编号保留给 (u, w), 新边 (w, v) 取新编号

    Raises:
        UnknownElementError: 边不存在
    """
    edge = graph.edge(edge_id)
    w = graph.next_vertex_id()
    fresh = graph.next_edge_id()
    edges = [e for e in graph.edges if e.id != edge_id]
    edges.append(Edge(edge_id, edge.u, w))
    edges.append(Edge(fresh, w, edge.v))
    return MultiGraph(list(graph.vertices) + [w], edges)


def is_cycle(graph: MultiGraph) -> bool:
    """连通且每个顶点度数为2 (两点两平行边也算)"""
    if graph.n < 2 or graph.m != graph.n:
        return False
    return all(graph.degree(v) == 2 for v in graph.vertices) and is_connected(graph)


def cycle_order(graph: MultiGraph) -> List[int]:
    """环图沿环的顶点顺序, 从最小编号出发并走向较小的邻居"""
    start = graph.vertices[0]
    order = [start]
    previous_edge = -1
    current = start
    while True:
        choices = sorted(
            (graph.edge(e).other(current), e) for e in graph.incident(current) if e != previous_edge
        )
        nxt, previous_edge = choices[0]
        if nxt == start:
            return order
        order.append(nxt)
        current = nxt
