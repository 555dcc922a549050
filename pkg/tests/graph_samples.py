"""
测试用样例图

小型标准图 (环, 完全图, θ 图, 树) 以及夹具目录中的图文件。
"""

from itertools import combinations
from pathlib import Path
from typing import Iterable, List, Tuple

from book_embed.graph.io import read_embedding_file, read_graph_file
from book_embed.graph.models import BookEmbedding, MultiGraph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def cycle(n: int) -> MultiGraph:
    return MultiGraph.from_pairs([(i, (i + 1) % n) for i in range(n)], range(n))


def path(n: int) -> MultiGraph:
    return MultiGraph.from_pairs([(i, i + 1) for i in range(n - 1)], range(n))


def star(leaves: int) -> MultiGraph:
    return MultiGraph.from_pairs([(0, i) for i in range(1, leaves + 1)], range(leaves + 1))


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(combinations(range(n), 2), range(n))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_pairs([(i, a + j) for i in range(a) for j in range(b)], range(a + b))


def theta(*lengths: int) -> MultiGraph:
    """两极 0, 1 之间给定内部顶点数的若干条路径"""
    pairs: List[Tuple[int, int]] = []
    next_id = 2
    for inner in lengths:
        chain = [0] + list(range(next_id, next_id + inner)) + [1]
        next_id += inner
        pairs.extend(zip(chain, chain[1:]))
    return MultiGraph.from_pairs(pairs, range(next_id))


def wheel(spokes: int) -> MultiGraph:
    """中心 0 与环 1..spokes"""
    rim = [(i, i % spokes + 1) for i in range(1, spokes + 1)]
    return MultiGraph.from_pairs([(0, i) for i in range(1, spokes + 1)] + rim, range(spokes + 1))


def goldner_harary() -> MultiGraph:
    """
    最小的非哈密顿极大平面图 (11个顶点, 27条边)

    三角双锥 (三角形 0,1,2 与两个顶点 3, 4) 的六个面中各插入一个顶点。
    """
    pairs = [(0, 1), (1, 2), (0, 2)]
    pairs += [(apex, v) for apex in (3, 4) for v in (0, 1, 2)]
    faces = [(a, b, apex) for apex in (3, 4) for a, b in ((0, 1), (1, 2), (0, 2))]
    for offset, face in enumerate(faces):
        pairs += [(5 + offset, v) for v in face]
    return MultiGraph.from_pairs(pairs, range(11))


def with_pendants(graph: MultiGraph, anchors: Iterable[int]) -> MultiGraph:
    """在给定顶点上各挂一个新顶点"""
    pairs = [(e.u, e.v) for e in graph.edges]
    vertices = list(graph.vertices)
    for anchor in anchors:
        new = max(vertices) + 1
        vertices.append(new)
        pairs.append((anchor, new))
    return MultiGraph.from_pairs(pairs, vertices)


def figure1() -> MultiGraph:
    """19个顶点, 31条边 (含一对平行边) 的子哈密顿图"""
    return read_graph_file(fixture_path("figure1.edges"))


def figure1_embedding() -> BookEmbedding:
    return read_embedding_file(fixture_path("figure1.embedding.json"))
