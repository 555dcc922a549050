"""
套索运算

由骨架边集合直接计算包围它的套索, 以及弱套索的异或运算。
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..planarity.models import CombinatorialEmbedding
from .models import Subcurve, WeakNoose, try_noose


def noose_from_edges(embedding: CombinatorialEmbedding, edge_set: Iterable[int]) -> Optional[WeakNoose]:
    """
    计算把 edge_set 与其余边分开的套索

    在每个顶点的旋转中, 相邻两条边归属不同时对应一个换侧角; 每个面恰好两个换侧角时,
    两个角之间的子曲线穿过该面。

    Args:
        embedding: 骨架的组合嵌入
        edge_set: 一侧的边集合

    Returns:
        Optional[WeakNoose]: 不存在单一闭曲线时返回 None
    """
    inside = frozenset(edge_set)
    face_corners: Dict[int, List[int]] = {}

    for v, order in embedding.rotation.items():
        k = len(order)
        switches = [
            i for i in range(k)
            if (order[i] in inside) != (order[(i + 1) % k] in inside)
        ]
        if not switches:
            continue
        if len(switches) != 2:
            return None
        for i in switches:
            face_corners.setdefault(embedding.corner_face[(v, i)], []).append(v)

    subcurves: List[Subcurve] = []
    for face, corners in face_corners.items():
        if len(corners) != 2 or corners[0] == corners[1]:
            return None
        subcurves.append(Subcurve.between(corners[0], corners[1], face))
    if not subcurves:
        return None
    return try_noose(subcurves)


def leaf_noose(embedding: CombinatorialEmbedding, edge_id: int) -> WeakNoose:
    """紧贴单条边两侧的套索"""
    edge = embedding.graph.edge(edge_id)
    first, second = embedding.faces_of_edge(edge_id)
    return WeakNoose(frozenset({
        Subcurve.between(edge.u, edge.v, first),
        Subcurve.between(edge.u, edge.v, second),
    }))


def xor_nooses(first: WeakNoose, second: WeakNoose) -> Optional[WeakNoose]:
    """
    弱套索异或: 子曲线集合的对称差

    Returns:
        Optional[WeakNoose]: 结果不是单一闭曲线时返回 None
    """
    return try_noose(first.subcurves ^ second.subcurves)


def is_triangle(noose: WeakNoose) -> bool:
    """三条子曲线且位于同一个面, 因而不包围任何边"""
    return len(noose) == 3 and len({c.face for c in noose.subcurves}) == 1


def triangle_partitions(residue: FrozenSet[Subcurve]) -> List[Tuple[WeakNoose, ...]]:
    """
    把剩余子曲线划分成至多两个同面三角形

    Args:
        residue: O_P ⊕ O_L ⊕ O_R

    Returns:
        List[Tuple[WeakNoose, ...]]: 所有可行划分, 空剩余对应唯一的空划分
    """
    if not residue:
        return [()]
    if len(residue) == 3:
        noose = try_noose(residue)
        return [(noose,)] if noose is not None and is_triangle(noose) else []
    if len(residue) != 6:
        return []

    curves = sorted(residue)
    anchor, rest = curves[0], curves[1:]
    found: List[Tuple[WeakNoose, ...]] = []
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            part = frozenset({anchor, rest[i], rest[j]})
            first = try_noose(part)
            second = try_noose(residue - part)
            if first is None or second is None:
                continue
            if is_triangle(first) and is_triangle(second):
                found.append((first, second))
    return found
