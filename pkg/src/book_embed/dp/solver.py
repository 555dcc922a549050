"""
子哈密顿判定

按连通分量与块逐个判定: 单边与环 (含两条平行边) 直接给出见证; 非平面块直接否定;
其余块 (包括三条以上的平行边束) 构建以最小边为根的SPQR树, 自底向上计算每个节点
的类型表, 根的子节点表中含满类型时判定为是, 并由满类型的路径系统得到子哈密顿圈。
各块的圈转成2页书嵌入后沿块-割点树合并。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from ..common.config import SolverConfig
from ..common.constants import NodeKind, Verdict
from ..common.exceptions import EmbeddingIntegrityError, InternalInconsistencyError
from ..graph.models import BookEmbedding, HamiltonianWitness, MultiGraph
from ..graph.operations import blocks, connected_components, cycle_order, is_cycle
from ..oracle.verify import check_embedding, verify_witness
from ..planarity.embedding import planar_embedding, planar_with_cycle
from ..planarity.models import NonPlanar
from ..spqr.builder import build_spqr
from ..spqr.models import SpqrTree
from ..types.node_types import full_node_type
from .audit import audit_tables
from .embedding import concatenate, merge_blocks, witness_to_embedding
from .models import DecisionResult, SolverStats, TypeTable
from .pnode import p_node_types
from .qnode import q_node_types
from .rsnode import rs_node_types

logger = logging.getLogger(__name__)

# 单个节点的计算结果: 类型表, 分解宽度, P节点序列数
_NodeResult = Tuple[TypeTable, int, int]


class BlockSolver:
    """
    单个二连通块的SPQR树动态规划

    Args:
        block: 二连通块
        config: 求解器配置
        stats: 累计的求解统计
    """

    def __init__(self, block: MultiGraph, config: SolverConfig, stats: SolverStats):
        self.block = block
        self.config = config
        self.stats = stats
        self.tree: Optional[SpqrTree] = None
        self.tables: Dict[int, TypeTable] = {}

    def _node_table(self, node_id: int) -> _NodeResult:
        assert self.tree is not None
        node = self.tree.node(node_id)
        children = {c: self.tables[c] for c in node.children.values()}
        if node.kind is NodeKind.Q:
            return q_node_types(node), 0, 0
        if node.kind is NodeKind.P:
            table, sequences = p_node_types(children)
            return table, 0, sequences
        table, width = rs_node_types(node, children, self.config)
        return table, width, 0

    def _record(self, node_id: int, result: _NodeResult) -> None:
        assert self.tree is not None
        table, width, sequences = result
        self.tables[node_id] = table
        self.stats.count_node(self.tree.node(node_id).kind.value)
        self.stats.record_table(len(table))
        self.stats.max_width = max(self.stats.max_width, width)
        self.stats.p_sequences += sequences

    def compute_tables(self) -> Dict[int, TypeTable]:
        """
        自底向上计算全部类型表; 并行时同一高度的节点同时计算

        Returns:
            Dict[int, TypeTable]: 节点编号 -> 类型表
        """
        with self.stats.timer("spqr"):
            self.tree = build_spqr(self.block, min(self.block.edge_ids))

        with self.stats.timer("dp"):
            if not self.config.parallel:
                for node_id in self.tree.postorder():
                    self._record(node_id, self._node_table(node_id))
                return self.tables

            levels: Dict[int, List[int]] = {}
            for node_id, height in self.tree.heights().items():
                levels.setdefault(height, []).append(node_id)
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
                for height in sorted(levels):
                    level = sorted(levels[height])
                    for node_id, result in zip(level, executor.map(self._node_table, level)):
                        self._record(node_id, result)
        return self.tables

    def solve(self) -> Optional[Tuple[int, ...]]:
        """
        判定并返回块的子哈密顿圈

        Returns:
            Optional[Tuple[int, ...]]: 从最小顶点出发的圈; 判定为否时返回 None

        Raises:
            InternalInconsistencyError: 重建的圈未通过校验
        """
        tables = self.compute_tables()
        assert self.tree is not None
        if self.config.audit:
            with self.stats.timer("audit"):
                audit_tables(self.tree, tables, self.config)

        root_table = tables[self.tree.root_child]
        full = full_node_type()
        if full not in root_table:
            return None
        return extract_witness(self.block, root_table)


def extract_witness(block: MultiGraph, root_table: TypeTable) -> Tuple[int, ...]:
    """
    由根子节点表中满类型的路径系统得到子哈密顿圈

    Raises:
        InternalInconsistencyError: 圈不是顶点排列或加入后不再平面
    """
    cycle = root_table.witness(full_node_type()).cycle_vertices()
    if sorted(cycle) != sorted(block.vertices):
        raise InternalInconsistencyError("重建的圈没有恰好经过全部顶点", "extract_witness")
    if len(cycle) >= 3 and not planar_with_cycle(block, cycle):
        raise InternalInconsistencyError("重建的圈加入后图不再是平面图", "extract_witness")
    return cycle


def decide_block(block: MultiGraph, config: SolverConfig, stats: SolverStats) -> Optional[Tuple[int, ...]]:
    """
    判定一个块

    Args:
        block: 二连通块或单边块
        config: 求解器配置
        stats: 求解统计

    Returns:
        Optional[Tuple[int, ...]]: 块的子哈密顿圈; 判定为否时返回 None
    """
    if block.m == 1:
        return tuple(sorted(block.vertices))
    if is_cycle(block):
        return tuple(cycle_order(block))
    with stats.timer("planarity"):
        planar = not isinstance(planar_embedding(block), NonPlanar)
    if not planar:
        logger.debug("块 %s 不是平面图", sorted(block.vertices))
        return None
    return BlockSolver(block, config, stats).solve()


def decide_subham(graph: MultiGraph, config: Optional[SolverConfig] = None) -> DecisionResult:
    """
    判定图是否子哈密顿 (等价于存在2页书嵌入)

    Args:
        graph: 多重图
        config: 求解器配置, 默认使用默认配置

    Returns:
        DecisionResult: 判定结果; 为是时附带经过校验的见证与书嵌入

    Raises:
        WidthCapExceededError: 某个骨架的分解宽度超过上限
        DecompositionError: 球面切分分解构建失败
        InternalInconsistencyError: 见证或嵌入未通过校验
    """
    config = config or SolverConfig()
    stats = SolverStats()
    component_embeddings: List[BookEmbedding] = []

    for component in connected_components(graph):
        with stats.timer("blocks"):
            decomposition = blocks(component)
        stats.blocks += len(decomposition.blocks)
        if not decomposition.blocks:
            component_embeddings.append(BookEmbedding(tuple(component.vertices), {}))
            continue

        block_embeddings: List[BookEmbedding] = []
        for block in decomposition.blocks:
            cycle = decide_block(block, config, stats)
            if cycle is None:
                logger.info("块 %s 不存在2页书嵌入", sorted(block.vertices))
                return DecisionResult(Verdict.NO, stats=stats)
            block_embeddings.append(witness_to_embedding(block, cycle))
        component_embeddings.append(merge_blocks(decomposition.blocks, block_embeddings))

    with stats.timer("embedding"):
        embedding = concatenate(component_embeddings)
        try:
            check_embedding(graph, embedding, pages=2)
        except EmbeddingIntegrityError as exc:
            raise InternalInconsistencyError(f"生成的书嵌入不合法: {exc.message}", "decide_subham") from exc
        witness = HamiltonianWitness(embedding.order)
        if not verify_witness(graph, witness):
            raise InternalInconsistencyError("书脊顺序不是合法的子哈密顿见证", "decide_subham")

    logger.debug("判定完成: %d 个块, 最大宽度 %d, 最大表 %d",
                 stats.blocks, stats.max_width, stats.largest_table)
    return DecisionResult(Verdict.YES, witness, embedding, stats)
