"""
平面嵌入

调用 networkx 的平面性检测, 把结果转换为带平行边的旋转系统并遍历所有面。
平行边先在中点细分, 再从细分点的顺时针顺序恢复原边的旋转。
"""

import logging
from typing import Dict, Hashable, List, Sequence, Tuple, Union

import networkx as nx

from ..common.exceptions import ContractViolationError, EmbeddingIntegrityError
from ..graph.models import MultiGraph
from ..graph.operations import connected_components
from .models import CombinatorialEmbedding, Dart, NonPlanar, RotationMap

logger = logging.getLogger(__name__)


def _midpoint(edge_id: int) -> Tuple[str, int]:
    return ("e", edge_id)


def _subdivided(graph: MultiGraph) -> nx.Graph:
    """每条边在中点细分后的简单图"""
    subdivided = nx.Graph()
    subdivided.add_nodes_from(graph.vertices)
    for edge in graph.edges:
        mid = _midpoint(edge.id)
        subdivided.add_edge(edge.u, mid)
        subdivided.add_edge(mid, edge.v)
    return subdivided


def planar_embedding(graph: MultiGraph) -> Union[CombinatorialEmbedding, NonPlanar]:
    """
    计算平面嵌入

    Args:
        graph: 多重图

    Returns:
        CombinatorialEmbedding | NonPlanar: 平面图返回组合嵌入, 否则返回非平面结果
    """
    is_planar, certificate = nx.check_planarity(_subdivided(graph))
    if not is_planar:
        return NonPlanar(graph.n, graph.m)

    rotation: Dict[int, Tuple[int, ...]] = {}
    for v in graph.vertices:
        if graph.degree(v) == 0:
            rotation[v] = ()
            continue
        rotation[v] = tuple(mid[1] for mid in certificate.neighbors_cw_order(v))
    return trace_faces(graph, rotation)


def is_planar(graph: MultiGraph) -> bool:
    """平面性判定"""
    return bool(nx.check_planarity(_subdivided(graph))[0])


def trace_faces(graph: MultiGraph, rotation: RotationMap) -> CombinatorialEmbedding:
    """
    由旋转系统遍历所有面

    沿边 e 到达顶点 w 后, 从 w 的旋转中 e 的下一条边离开; 到达与离开之间的角归属当前面。

    Args:
        graph: 多重图
        rotation: 顶点 -> 顺时针关联边

    Returns:
        CombinatorialEmbedding: 组合嵌入

    Raises:
        EmbeddingIntegrityError: 旋转系统与图不一致或不满足欧拉公式
    """
    _check_rotation(graph, rotation)
    positions: Dict[Dart, int] = {}
    for v, order in rotation.items():
        for index, edge_id in enumerate(order):
            positions[(v, edge_id)] = index

    faces: List[Tuple[Dart, ...]] = []
    dart_face: Dict[Dart, int] = {}
    corner_face: Dict[Tuple[int, int], int] = {}

    for edge in graph.edges:
        for start in ((edge.u, edge.id), (edge.v, edge.id)):
            if start in dart_face:
                continue
            face_id = len(faces)
            walk: List[Dart] = []
            dart = start
            while dart not in dart_face:
                dart_face[dart] = face_id
                walk.append(dart)
                v, edge_id = dart
                w = graph.edge(edge_id).other(v)
                index = positions[(w, edge_id)]
                order = rotation[w]
                corner_face[(w, index)] = face_id
                dart = (w, order[(index + 1) % len(order)])
            if dart != start:
                raise EmbeddingIntegrityError(f"面遍历未回到起点 {start}")
            faces.append(tuple(walk))

    embedding = CombinatorialEmbedding(
        graph=graph,
        rotation=dict(rotation),
        faces=faces,
        outer_face=0,
        dart_face=dart_face,
        corner_face=corner_face,
    )
    _check_euler(embedding)
    return embedding


def faces(embedding: CombinatorialEmbedding) -> List[Tuple[Dart, ...]]:
    """
    面遍历列表, 重新校验后返回

    Raises:
        EmbeddingIntegrityError: 嵌入不一致
    """
    _check_rotation(embedding.graph, embedding.rotation)
    _check_euler(embedding)
    return list(embedding.faces)


def _check_rotation(graph: MultiGraph, rotation: RotationMap) -> None:
    if set(rotation) != set(graph.vertices):
        raise EmbeddingIntegrityError("旋转系统的顶点集合与图不一致")
    for v in graph.vertices:
        if sorted(rotation[v]) != sorted(graph.incident(v)):
            raise EmbeddingIntegrityError(f"顶点 {v} 的旋转与关联边不一致")


def _check_euler(embedding: CombinatorialEmbedding) -> None:
    """每个非平凡连通分量满足 n - m + f = 2"""
    graph = embedding.graph
    face_count: Dict[int, int] = {}
    component_of: Dict[int, int] = {}
    for index, component in enumerate(connected_components(graph)):
        for v in component.vertices:
            component_of[v] = index
        face_count[index] = 0
    for walk in embedding.faces:
        face_count[component_of[walk[0][0]]] += 1

    for index, component in enumerate(connected_components(graph)):
        if component.m == 0:
            continue
        if component.n - component.m + face_count[index] != 2:
            raise EmbeddingIntegrityError(
                f"分量 {index} 不满足欧拉公式: n={component.n}, m={component.m}, f={face_count[index]}"
            )


def planar_with_cycle(graph: MultiGraph, cycle: Sequence[int]) -> bool:
    """
    图加上循环 H 的边后是否仍为平面图 (已有的边按平行边加入)

    Args:
        graph: 多重图
        cycle: 顶点的循环排列, 至少3个顶点

    Returns:
        bool: 是否平面

    Raises:
        ContractViolationError: cycle 不是顶点的排列
    """
    if len(cycle) < 3:
        raise ContractViolationError("循环至少需要3个顶点", "planar_with_cycle")
    if len(set(cycle)) != len(cycle) or set(cycle) != set(graph.vertices):
        raise ContractViolationError("循环必须是全部顶点的一个排列", "planar_with_cycle")

    combined = _subdivided(graph)
    k = len(cycle)
    for i in range(k):
        # H 的边直接相连, 与细分后的原边不会重合
        combined.add_edge(cycle[i], cycle[(i + 1) % k])
    return bool(nx.check_planarity(combined)[0])


def cycle_sides(graph: MultiGraph, cycle: Sequence[int]) -> Dict[int, int]:
    """
    在 G ∪ H 的平面嵌入中判断每条边位于 H 的哪一侧

    Args:
        graph: 多重图
        cycle: 使 G ∪ H 平面的循环 (至少3个顶点)

    Returns:
        Dict[int, int]: 边编号 -> 1 或 2

    Raises:
        ContractViolationError: G ∪ H 非平面
    """
    combined = _subdivided(graph)
    k = len(cycle)
    for i in range(k):
        combined.add_edge(cycle[i], cycle[(i + 1) % k])
    is_planar_result, certificate = nx.check_planarity(combined)
    if not is_planar_result:
        raise ContractViolationError("G 加上 H 不是平面图", "cycle_sides")

    sides: Dict[int, int] = {}
    for i, v in enumerate(cycle):
        after: Hashable = cycle[(i + 1) % k]
        before: Hashable = cycle[i - 1]
        side = 1
        # 从 H 的后继出发顺时针扫到前驱, 之间的边在第1侧
        for neighbor in _cw_from(certificate, v, after):
            if neighbor == before:
                side = 2
                continue
            if isinstance(neighbor, tuple):
                sides.setdefault(neighbor[1], side)
    logger.debug("cycle_sides: %d 条边分到两侧", len(sides))
    return sides


def _cw_from(certificate: nx.PlanarEmbedding, v: Hashable, first: Hashable) -> List[Hashable]:
    order = list(certificate.neighbors_cw_order(v))
    start = order.index(first)
    return order[start + 1:] + order[:start]
