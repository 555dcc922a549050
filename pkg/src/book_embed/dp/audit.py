"""
类型表审计

检查每个节点的类型表是否在左右镜像下封闭, 并抽样核对表项的见证路径系统:
端点与类型的匹配一致, 内部点恰好覆盖相关图中除两极外的顶点与 S, 且相关图加上
边界圈、外部顶点与路径边后仍为平面图。
"""

import logging
from collections import Counter
from typing import Dict, Hashable, Iterable, Tuple

import networkx as nx

from ..common.config import SolverConfig
from ..common.constants import POLE_S, POLE_T
from ..common.exceptions import InternalInconsistencyError
from ..graph.models import MultiGraph
from ..spqr.models import SpqrTree
from ..types.models import Crossing, NooseType, make_pair
from ..types.node_types import L0, L1, R0, R1, mirror_type, node_type_label
from .models import PathSystem, TypeTable

logger = logging.getLogger(__name__)

# 边界圈: s, l, l', t, r', r
_BOUNDARY = (POLE_S, L0, L1, POLE_T, R1, R0)
_APEX = ("audit", "apex")


def check_mirror_closed(table: TypeTable, node_id: int) -> None:
    """
    镜像封闭检查

    Raises:
        InternalInconsistencyError: 某个类型的镜像不在表中
    """
    for x in table:
        if mirror_type(x) not in table:
            raise InternalInconsistencyError(
                f"节点 {node_id} 的表含 {node_type_label(x)} 但缺少其镜像", "audit"
            )


def _node(token: Hashable, poles: Dict[str, int]) -> Hashable:
    if isinstance(token, Crossing):
        return ("crossing", token.subcurve.face, token.index)
    return poles.get(token, token)


def _path_edges(paths: PathSystem) -> Iterable[Tuple[Hashable, Hashable]]:
    for segment in paths.segments:
        yield from zip(segment, segment[1:])
        if paths.closed and len(segment) > 2:
            yield segment[-1], segment[0]


def check_witness(pertinent: MultiGraph, poles: Tuple[int, int], x: NooseType, paths: PathSystem) -> None:
    """
    核对一个表项的见证路径系统

    Args:
        pertinent: 节点的相关图
        poles: 两极 (s, t)
        x: 节点类型
        paths: 见证路径系统

    Raises:
        InternalInconsistencyError: 见证与类型不符或无法平面地画在区域内
    """
    s, t = poles
    pole_map = {POLE_S: s, POLE_T: t}
    label = node_type_label(x)

    if x.is_full != paths.closed:
        raise InternalInconsistencyError(f"类型 {label} 的见证{'不' if x.is_full else ''}是圈", "audit")
    if not x.is_full:
        expected = frozenset(
            make_pair(*(pole_map.get(a, a) if not isinstance(a, Crossing) else a for a in pair))
            for pair in x.matching
        )
        if paths.endpoints != expected:
            raise InternalInconsistencyError(f"类型 {label} 的见证端点与匹配不一致", "audit")

    inner = Counter(v for v in paths.interior() if not isinstance(v, Crossing))
    if any(count > 1 for count in inner.values()):
        raise InternalInconsistencyError(f"类型 {label} 的见证重复经过顶点", "audit")
    required = (set(pertinent.vertices) - {s, t}) | {pole_map[v] for v in x.inner}
    if set(inner) != required:
        raise InternalInconsistencyError(f"类型 {label} 的见证没有恰好覆盖内部顶点", "audit")

    combined = nx.Graph()
    for edge in pertinent.edges:
        middle = ("edge", edge.id)
        combined.add_edge(edge.u, middle)
        combined.add_edge(middle, edge.v)
    ring = [_node(token, pole_map) for token in _BOUNDARY]
    for i, node in enumerate(ring):
        combined.add_edge(node, ring[(i + 1) % len(ring)])
        combined.add_edge(_APEX, node)
    for a, b in _path_edges(paths):
        combined.add_edge(_node(a, pole_map), _node(b, pole_map))
    if not nx.check_planarity(combined)[0]:
        raise InternalInconsistencyError(f"类型 {label} 的见证无法平面地画在区域内", "audit")


def audit_tables(tree: SpqrTree, tables: Dict[int, TypeTable], config: SolverConfig) -> int:
    """
    审计整棵树的类型表

    Args:
        tree: SPQR树
        tables: 节点编号 -> 类型表
        config: 求解器配置 (抽样个数)

    Returns:
        int: 核对的见证个数

    Raises:
        InternalInconsistencyError: 任一检查失败
    """
    checked = 0
    for node_id in tree.postorder():
        table = tables[node_id]
        check_mirror_closed(table, node_id)
        if config.audit_samples == 0:
            continue
        node = tree.node(node_id)
        pertinent = tree.pertinent_graph(node_id)
        for x, paths in list(table.items())[: config.audit_samples]:
            check_witness(pertinent, node.poles, x, paths)
            checked += 1
    logger.debug("审计: %d 个节点, %d 个见证", len(tables), checked)
    return checked
