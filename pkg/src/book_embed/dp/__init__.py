"""
动态规划模块

Q/P/R/S 节点的类型表、饱和匹配、审计、见证提取与书嵌入合并, 以及顶层判定入口。
"""

from .audit import audit_tables, check_mirror_closed, check_witness
from .embedding import merge_blocks, witness_to_embedding
from .matching import saturating_matching
from .models import DecisionResult, PathSystem, SolverStats, TypeTable
from .pnode import BadSequence, p_node_types
from .qnode import q_node_types, q_table_template
from .rsnode import rs_node_types, triangle_table
from .solver import BlockSolver, decide_block, decide_subham, extract_witness

__all__ = [
    "audit_tables",
    "check_mirror_closed",
    "check_witness",
    "merge_blocks",
    "witness_to_embedding",
    "saturating_matching",
    "DecisionResult",
    "PathSystem",
    "SolverStats",
    "TypeTable",
    "BadSequence",
    "p_node_types",
    "q_node_types",
    "q_table_template",
    "rs_node_types",
    "triangle_table",
    "BlockSolver",
    "decide_block",
    "decide_subham",
    "extract_witness",
]
