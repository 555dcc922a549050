"""
ℓ>=3 页的长路径核

删除悬挂点后取最小反馈边集 F 与生成树 G_F, 以分支点和 F 的端点为初始集合 B,
B 之间的极大真路径为 P。循环: 若 P 中每条路径都长于阈值 (|B|+1)·2^|P|·|P|,
就把它们缩短到恰好等于阈值并结束; 否则把短路径的顶点并入 B, 从 P 中去掉这些路径
后继续。缩短记录为一串以路径上最后一个保留的内部顶点为中心的收缩。
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from ..common.constants import KernelRule
from ..common.exceptions import ContractViolationError
from ..graph.models import MultiGraph
from ..graph.operations import feedback_edge_set
from .models import Chain, KernelStep, KernelTrace, WorkingGraph, find_chains
from .pendants import peel_into

logger = logging.getLogger(__name__)


def path_threshold(boundary: int, paths: int) -> int:
    """(|B|+1)·2^|P|·|P|"""
    return (boundary + 1) * (2 ** paths) * paths


def shrink_path(work: WorkingGraph, chain: Chain, length: int, steps: List[KernelStep]) -> None:
    """
    把路径缩短到给定长度

    保留前 length-1 个内部顶点, 其余内部顶点依次并入最后一个保留的内部顶点。
    """
    vertices = chain.vertices()
    kept = vertices[length - 1]
    for i in range(length - 1, chain.length - 1):
        gone, moved = work.contract(chain.edges[i], kept)
        if gone != vertices[i + 1]:
            raise ContractViolationError(f"路径缩短时并入了错误的顶点 {gone}", "shrink_path")
        steps.append(KernelStep(KernelRule.PATH_SHRINK, gone, kept, chain.edges[i], moved[0]))


def _spanning_sets(graph: MultiGraph) -> Tuple[Set[int], Dict[str, List[int]], List[Chain]]:
    """计算 F, 辅助集合与初始路径集合"""
    feedback = feedback_edge_set(graph)
    tree = WorkingGraph(graph.edge_subgraph([e for e in graph.edge_ids if e not in feedback]))
    for v in graph.vertices:
        tree.vertices.add(v)
        tree.incident.setdefault(v, set())

    leaves = sorted(v for v in tree.vertices if tree.degree(v) == 1)
    branching = sorted(v for v in tree.vertices if tree.degree(v) >= 3)
    touching = sorted({x for e in feedback for x in graph.edge(e).ends})
    boundary = sorted(set(branching) | set(touching))
    sets = {"B_F": boundary, "V_F": touching, "T_1": leaves, "T_3": branching}
    return feedback, sets, find_chains(tree, anchors=boundary)


def kernelize_multi_page(
    graph: MultiGraph,
    pages: int,
    threshold: Optional[int] = None,
) -> Tuple[MultiGraph, KernelTrace]:
    """
    ℓ>=3 页书嵌入的核

    Args:
        graph: 连通多重图
        pages: 页数 ℓ, 至少为3
        threshold: 固定的路径长度阈值, 仅用于在小规模上演示缩短行为; None 时按公式计算

    Returns:
        Tuple[MultiGraph, KernelTrace]: 核与规则记录

    Raises:
        ContractViolationError: ℓ < 3 或阈值小于2
    """
    if pages < 3:
        raise ContractViolationError(f"长路径核要求 ℓ>=3, 实际为 {pages}", "kernelize_multi_page",
                                     "2页请使用 kernelize_two_page")
    if threshold is not None and threshold < 2:
        raise ContractViolationError(f"路径长度阈值至少为2, 实际为 {threshold}", "kernelize_multi_page")

    work = WorkingGraph(graph)
    steps: List[KernelStep] = []
    peel_into(work, steps)
    peeled = work.to_graph()

    feedback, sets, paths = _spanning_sets(peeled)
    trace = KernelTrace(graph, peeled, pages=pages, steps=steps, fen=len(feedback), sets=sets,
                        paths=[chain.vertices() for chain in paths])

    boundary: Set[int] = set(sets["B_F"])
    remaining = list(paths)
    while remaining:
        trace.iterations += 1
        limit = threshold if threshold is not None else path_threshold(len(boundary), len(remaining))
        short = [chain for chain in remaining if chain.length <= limit]
        if not short:
            trace.threshold = limit
            for chain in remaining:
                shrink_path(work, chain, limit, steps)
            logger.debug("缩短 %d 条路径到长度 %d", len(remaining), limit)
            break
        for chain in short:
            boundary.update(chain.vertices())
        remaining = [chain for chain in remaining if chain.length > limit]

    trace.sets["B"] = sorted(boundary)
    trace.kernel = work.to_graph()
    logger.debug("%d 页核: %d 轮, 核 n=%d m=%d", pages, trace.iterations, trace.kernel.n, trace.kernel.m)
    return trace.kernel, trace
