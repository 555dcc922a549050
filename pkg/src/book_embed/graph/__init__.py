"""
多重图模块

多重图表示、输入输出、块分解与编辑原语。
"""

from .io import parse_graph, read_graph_file, relabel_for_format, serialize_graph
from .models import BlockDecomposition, BookEmbedding, Edge, HamiltonianWitness, MultiGraph
from .operations import (
    blocks,
    connected_components,
    contract_edge,
    feedback_edge_set,
    subdivide_edge,
)

__all__ = [
    "MultiGraph",
    "Edge",
    "BlockDecomposition",
    "BookEmbedding",
    "HamiltonianWitness",
    "parse_graph",
    "read_graph_file",
    "relabel_for_format",
    "serialize_graph",
    "blocks",
    "connected_components",
    "contract_edge",
    "feedback_edge_set",
    "subdivide_edge",
]
