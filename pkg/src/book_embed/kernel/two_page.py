"""
2页线性核

删除悬挂点后, 图由一棵树加 k 条反馈边组成, 只有度2顶点链可能很长。
链上收缩任意一条内部边都保持2页可嵌入性, 因此每条链收缩到两个内部顶点
(首尾相同的链保留三个), 纯环收缩为4个顶点。连通输入的核至多有 12k-8 个顶点、
14k-9 条边。
"""

import logging
from typing import List, Tuple

from ..common.constants import KernelRule
from ..graph.models import MultiGraph
from ..graph.operations import feedback_edge_number
from .models import Chain, KernelStep, KernelTrace, WorkingGraph, find_chains
from .pendants import peel_into

logger = logging.getLogger(__name__)


def _inner_limit(chain: Chain) -> int:
    """链保留的内部顶点个数"""
    return 3 if chain.start == chain.end else 2


def contract_chain(work: WorkingGraph, chain: Chain, steps: List[KernelStep]) -> None:
    """从链首开始依次收缩内部边, 直到内部顶点数降到上限"""
    inner = list(chain.inner)
    edges = list(chain.edges)
    while len(inner) > _inner_limit(chain):
        edge_id = edges[1]
        kept = min(inner[0], inner[1])
        gone, moved = work.contract(edge_id, kept)
        steps.append(KernelStep(KernelRule.EDGE_CONTRACT, gone, kept, edge_id, moved[0]))
        inner[0:2] = [kept]
        del edges[1]


def kernelize_two_page(graph: MultiGraph) -> Tuple[MultiGraph, KernelTrace]:
    """
    2页书嵌入 (子哈密顿性) 的线性核

    Args:
        graph: 连通多重图

    Returns:
        Tuple[MultiGraph, KernelTrace]: 核与规则记录
    """
    work = WorkingGraph(graph)
    steps: List[KernelStep] = []
    peel_into(work, steps)
    peeled = len(steps)

    for chain in find_chains(work):
        contract_chain(work, chain, steps)

    kernel = work.to_graph()
    trace = KernelTrace(graph, kernel, pages=2, steps=steps, fen=feedback_edge_number(kernel))
    logger.debug("2页核: 删除 %d 个悬挂点, 收缩 %d 条边, 核 n=%d m=%d (k=%d)",
                 peeled, len(steps) - peeled, kernel.n, kernel.m, trace.fen)
    return kernel, trace
