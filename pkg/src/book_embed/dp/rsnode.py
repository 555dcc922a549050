"""
R/S节点类型表

在骨架的固定嵌入上构建以参考边为根的球面切分分解。叶弧的表来自对应子节点的表,
改写到叶弧套索上; 内部弧按异或方案依次组合操作数的表, 三角形区域没有边, 它的表
由全部可实现类型组成; 根弧的表换回两极记号, 两种侧边对应方式都加入。
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from ..common.config import SolverConfig
from ..common.constants import NodeKind, POLE_S, POLE_T
from ..common.exceptions import ContractViolationError, InternalInconsistencyError
from ..graph.models import Edge
from ..planarity.embedding import planar_embedding
from ..planarity.models import CombinatorialEmbedding, NonPlanar
from ..spherecut.builder import build_spherecut
from ..spherecut.models import Subcurve, WeakNoose
from ..spherecut.plan import XorPlan, xor_plan
from ..spqr.models import SpqrNode
from ..types.combine import join_types, relabel_type
from ..types.enumerate import enumerate_types
from ..types.models import NooseType, Token, pair_tokens, token_key
from ..types.node_types import SIDE_L, SIDE_R
from .models import PathSystem, TypeTable

logger = logging.getLogger(__name__)


def _triangle_paths(x: NooseType) -> PathSystem:
    """
    无边区域中类型的路径系统

    每个内部顶点挂到顺时针方向上第一个匹配端点所在的路径上, 路径从一端出发, 先逆序
    经过挂在该端的顶点, 再顺序经过挂在另一端的顶点。
    """
    if x.is_full:
        return PathSystem.cycle(x.noose.cyclic_order())
    order = x.order
    attached: Dict[Token, List[Token]] = {}
    for i, token in enumerate(order):
        if token not in x.inner:
            continue
        for step in range(1, len(order)):
            candidate = order[(i + step) % len(order)]
            if candidate in x.terminals:
                attached.setdefault(candidate, []).append(token)
                break

    position = {token: i for i, token in enumerate(order)}
    segments = []
    for pair in sorted(x.matching, key=lambda p: tuple(token_key(t) for t in pair_tokens(p))):
        a, b = pair_tokens(pair)

        def clockwise_to(end: Token) -> List[Token]:
            # 按到 end 的顺时针距离从远到近排列
            return sorted(attached.get(end, []), key=lambda v: -((position[end] - position[v]) % len(order)))

        middle = list(reversed(clockwise_to(a))) + clockwise_to(b)
        segments.append((a,) + tuple(middle) + (b,))
    return PathSystem(tuple(segments))


@lru_cache(maxsize=1024)
def triangle_table(noose: WeakNoose) -> TypeTable:
    """
    无边三角形区域的类型表

    Args:
        noose: 同一面内三条子曲线构成的套索

    Returns:
        TypeTable: 满类型、空类型以及全部 M 非空的类型; 结果被缓存, 调用方只读
    """
    table = TypeTable()
    for x in sorted(enumerate_types(noose), key=NooseType.sort_key):
        if x.matching or x.is_empty or x.is_full:
            table.add(x, _triangle_paths(x))
    return table


def _leaf_table(embedding: CombinatorialEmbedding, edge: Edge, child: TypeTable) -> TypeTable:
    """把子节点的表改写到紧贴骨架边的套索上"""
    first, second = embedding.faces_of_edge(edge.id)
    low, high = min(edge.u, edge.v), max(edge.u, edge.v)
    subcurves = {
        SIDE_R: Subcurve.between(low, high, first),
        SIDE_L: Subcurve.between(low, high, second),
    }
    vertices = {POLE_S: low, POLE_T: high}
    table = TypeTable()
    for x, paths in child.items():
        relabeled, crossings = relabel_type(x, subcurves, vertices)
        table.add(relabeled, paths.relabel(crossings))
    return table


def _combine_tables(first: TypeTable, second: TypeTable) -> TypeTable:
    table = TypeTable()
    for result, x1, x2 in join_types(first.types(), second.types()):
        if result in table:
            continue
        table.add(result, first.witness(x1).merge(second.witness(x2)))
    return table


def _replay(plan: XorPlan, left: TypeTable, right: TypeTable) -> TypeTable:
    """按异或方案组合左右子弧与三角形的表"""
    tables: List[TypeTable] = [left, right] + [triangle_table(t) for t in plan.triangles]
    for i, j in plan.steps:
        tables.append(_combine_tables(tables[i], tables[j]))
    return tables[-1]


def _root_table(embedding: CombinatorialEmbedding, reference: Edge, table: TypeTable) -> TypeTable:
    """根弧的表换回两极记号, 左右两种对应方式都加入"""
    first, second = embedding.faces_of_edge(reference.id)
    low, high = min(reference.u, reference.v), max(reference.u, reference.v)
    one = Subcurve.between(low, high, first)
    other = Subcurve.between(low, high, second)
    vertices = {low: POLE_S, high: POLE_T}
    result = TypeTable()
    for subcurves in ({one: SIDE_R, other: SIDE_L}, {one: SIDE_L, other: SIDE_R}):
        for x, paths in table.items():
            relabeled, crossings = relabel_type(x, subcurves, vertices)
            result.add(relabeled, paths.relabel(crossings))
    return result


def rs_node_types(
    node: SpqrNode,
    children: Dict[int, TypeTable],
    config: SolverConfig,
) -> Tuple[TypeTable, int]:
    """
    R或S节点的类型表

    Args:
        node: R或S节点
        children: 子节点编号 -> 类型表
        config: 求解器配置 (宽度上限)

    Returns:
        Tuple[TypeTable, int]: 类型表与球面切分分解的宽度

    Raises:
        ContractViolationError: 节点不是R或S节点, 或缺少子节点的表
        WidthCapExceededError: 分解宽度超过上限
        InternalInconsistencyError: 骨架不是平面图
    """
    if node.kind not in (NodeKind.R, NodeKind.S):
        raise ContractViolationError(f"节点 {node.id} 不是R或S节点", "rs_node_types")
    missing = [c for c in node.children.values() if c not in children]
    if missing:
        raise ContractViolationError(f"缺少子节点 {missing} 的类型表", "rs_node_types")

    skeleton = node.skeleton
    embedding = planar_embedding(skeleton)
    if isinstance(embedding, NonPlanar):
        raise InternalInconsistencyError(f"节点 {node.id} 的骨架不是平面图", "rs_node_types")
    decomposition = build_spherecut(skeleton, embedding, node.reference, width_cap=config.width_cap)

    arc_tables: Dict[int, TypeTable] = {}
    for edge_id, arc_id in sorted(decomposition.leaves().items()):
        child = children[node.children[edge_id]]
        arc_tables[arc_id] = _leaf_table(embedding, skeleton.edge(edge_id), child)
    for parent, left, right in decomposition.inner_nodes():
        plan = xor_plan(decomposition, parent, left, right)
        arc_tables[parent] = _replay(plan, arc_tables[left], arc_tables[right])

    table = _root_table(embedding, skeleton.edge(node.reference), arc_tables[decomposition.root_arc])
    logger.debug("%s节点 %d: 宽度 %d, %d 个类型",
                 node.kind.value, node.id, decomposition.width, len(table))
    return table, decomposition.width
