"""
动态规划测试

测试Q/P节点类型表, 饱和匹配, 类型表与路径系统, 以及顶层子哈密顿判定。
"""

import random

import networkx as nx
import pytest

from book_embed.common.config import SolverConfig
from book_embed.common.constants import NodeKind, Verdict
from book_embed.common.exceptions import (
    ContractViolationError,
    InternalInconsistencyError,
    WidthCapExceededError,
)
from book_embed.dp import (
    BlockSolver,
    PathSystem,
    SolverStats,
    TypeTable,
    check_mirror_closed,
    decide_subham,
    p_node_types,
    q_node_types,
    q_table_template,
    saturating_matching,
    triangle_table,
    witness_to_embedding,
)
from book_embed.graph.generator import generate_instance
from book_embed.graph.models import MultiGraph
from book_embed.oracle import brute_force_subham, embedding_problems, verify_witness
from book_embed.spherecut.models import Subcurve, WeakNoose
from book_embed.spqr import build_spqr
from book_embed.types import GOOD_TYPES, full_node_type, make_node_type, mirror_type
from book_embed.types.models import Crossing

from .graph_samples import (
    complete,
    complete_bipartite,
    cycle,
    figure1,
    goldner_harary,
    path,
    star,
    theta,
    wheel,
    with_pendants,
)


def _q_leaf(graph: MultiGraph):
    tree = build_spqr(graph, 0)
    return next(n for n in tree.nodes.values() if n.kind is NodeKind.Q and n.id != tree.root)


class TestQNode:
    """测试Q节点类型表"""

    def test_template_size(self):
        """测试Q节点表的大小"""
        assert len(q_table_template()) == 48

    def test_template_contents(self):
        """测试Q节点表的典型表项"""
        types = [x for x, _ in q_table_template()]

        assert GOOD_TYPES[0] in types
        assert full_node_type() in types
        assert make_node_type([("s", "t")]) in types
        # 从 l 到 r 的路径必须穿过实边 s-t
        assert GOOD_TYPES[1] not in types

    def test_template_is_mirror_closed(self):
        """测试Q节点表镜像封闭"""
        table = TypeTable(dict(q_table_template()))

        check_mirror_closed(table, 0)
        assert all(mirror_type(x) in table for x in table)

    def test_instantiated_poles(self):
        """测试见证中的极点换成真实顶点"""
        leaf = _q_leaf(cycle(4))
        table = q_node_types(leaf)

        assert len(table) == 48
        assert table.witness(full_node_type()).cycle_vertices() == tuple(sorted(leaf.poles))

    def test_rejects_inner_nodes(self):
        """测试非Q节点"""
        tree = build_spqr(cycle(4), 0)

        with pytest.raises(ContractViolationError):
            q_node_types(tree.node(tree.root_child))


class TestPNode:
    """测试P节点类型表"""

    def test_requires_children(self):
        """测试没有子节点"""
        with pytest.raises(ContractViolationError):
            p_node_types({})

    def test_two_real_edges(self):
        """测试两条平行实边"""
        leaf = _q_leaf(cycle(3))
        child = q_node_types(leaf)
        table, sequences = p_node_types({1: child, 2: child})

        assert GOOD_TYPES[0] in table
        assert sequences >= 0
        check_mirror_closed(table, 0)

    def test_bundle_through_block_solver(self):
        """测试四条平行边经过有三个子节点的P节点"""
        block = MultiGraph.from_pairs([(0, 1)] * 4)
        solver = BlockSolver(block, SolverConfig(), SolverStats())
        tables = solver.compute_tables()
        root_child = solver.tree.node(solver.tree.root_child)

        assert root_child.kind is NodeKind.P
        assert len(root_child.children) == 3
        assert full_node_type() in tables[root_child.id]
        assert solver.solve() == (0, 1)


class TestTriangleTable:
    """测试无边三角形区域的类型表"""

    TRIANGLE = WeakNoose(frozenset({
        Subcurve(0, 1, "f"),
        Subcurve(1, 2, "f"),
        Subcurve(0, 2, "f"),
    }))

    def test_witness_endpoints(self):
        """测试见证路径的端点与内部点, 匹配中混有顶点与穿越点"""
        table = triangle_table(self.TRIANGLE)
        mixed = 0
        for x, paths in table.items():
            if x.is_full:
                assert sorted(paths.cycle_vertices()) == [0, 1, 2]
                continue
            assert paths.endpoints == x.matching
            assert set(paths.interior()) == set(x.inner)
            if any(isinstance(t, Crossing) for t in x.terminals) and any(
                not isinstance(t, Crossing) for t in x.terminals
            ):
                mixed += 1

        assert mixed > 0
        assert triangle_table(self.TRIANGLE) is table


class TestSaturatingMatching:
    """测试饱和匹配"""

    def test_plain_matching(self):
        """测试普通完美匹配"""
        result = saturating_matching([0, 1], {0: ["x", "y"], 1: ["x"]})

        assert result == {0: "y", 1: "x"}

    def test_required_side(self):
        """测试必须饱和的B侧点"""
        result = saturating_matching([0], {0: ["x", "y"]}, must_saturate=["y"])

        assert result == {0: "y"}

    def test_impossible(self):
        """测试无解的情形"""
        assert saturating_matching([0, 1], {0: ["x"], 1: ["x"]}) is None
        assert saturating_matching([0], {0: ["x"]}, must_saturate=["z"]) is None
        assert saturating_matching([0], {0: ["x", "y"]}, must_saturate=["x", "y"]) is None

    def test_empty(self):
        """测试空的A侧"""
        assert saturating_matching([], {}) == {}
        assert saturating_matching([], {}, must_saturate=["x"]) is None


class TestTables:
    """测试类型表与路径系统"""

    def test_first_witness_wins(self):
        """测试先到的见证保留"""
        table = TypeTable()
        first = PathSystem(((0, 1),))

        assert table.add(GOOD_TYPES[0], first)
        assert not table.add(GOOD_TYPES[0], PathSystem())
        assert table.witness(GOOD_TYPES[0]) == first
        assert len(table) == 1

    def test_missing_witness(self):
        """测试查询不存在的类型"""
        with pytest.raises(InternalInconsistencyError):
            TypeTable().witness(GOOD_TYPES[1])

    def test_path_merge(self):
        """测试在公共端点处拼接路径"""
        merged = PathSystem(((0, 1),)).merge(PathSystem(((1, 2),)))

        assert merged.endpoints == frozenset({frozenset({0, 2})})
        assert merged.interior() == [1]

    def test_cycle_vertices(self):
        """测试圈从最小顶点出发"""
        assert PathSystem.cycle((3, 1, 2)).cycle_vertices() == (1, 2, 3)
        with pytest.raises(InternalInconsistencyError):
            PathSystem(((0, 1),)).cycle_vertices()

    def test_cycle_merges_only_with_empty(self):
        """测试圈只能与空路径系统拼接"""
        ring = PathSystem.cycle((0, 1, 2))

        assert ring.merge(PathSystem()) == ring
        with pytest.raises(InternalInconsistencyError):
            ring.merge(PathSystem(((0, 1),)))


class TestWitnessEmbedding:
    """测试由见证构造书嵌入"""

    def test_k4(self):
        """测试K4的哈密顿圈"""
        graph = complete(4)
        embedding = witness_to_embedding(graph, [2, 3, 0, 1])

        assert embedding.order == (0, 1, 2, 3)
        assert embedding_problems(graph, embedding, 2) == []

    def test_not_a_permutation(self):
        """测试见证不是顶点排列"""
        with pytest.raises(ContractViolationError):
            witness_to_embedding(complete(4), [0, 1, 2])

    @pytest.mark.parametrize("size", [3, 4, 7])
    def test_cycle_edges_on_first_page(self, size):
        """测试与 H 平行的环边都在第1页"""
        embedding = witness_to_embedding(cycle(size), list(range(size)))

        assert set(embedding.pages.values()) == {1}

    def test_chords_on_both_pages(self):
        """测试K4中两条弦分在两页, 环边在第1页"""
        graph = complete(4)
        embedding = witness_to_embedding(graph, [0, 1, 2, 3])
        pages = {graph.edge(e).ends: page for e, page in embedding.pages.items()}

        assert pages[(0, 1)] == pages[(1, 2)] == pages[(2, 3)] == pages[(0, 3)] == 1
        assert {pages[(0, 2)], pages[(1, 3)]} == {1, 2}
        assert embedding_problems(graph, embedding, 2) == []

    def test_parallel_edges_along_cycle(self):
        """测试沿 H 的平行边都在第1页"""
        graph = MultiGraph.from_pairs([(0, 1), (0, 1), (1, 2), (0, 2), (0, 2)])
        embedding = witness_to_embedding(graph, [0, 1, 2])

        assert set(embedding.pages.values()) == {1}


def _assert_yes(graph: MultiGraph, config: SolverConfig = None):
    result = decide_subham(graph, config)
    assert result.verdict is Verdict.YES
    assert result.is_yes
    assert embedding_problems(graph, result.embedding, 2) == []
    assert verify_witness(graph, result.witness)
    return result


class TestDecideSubham:
    """测试子哈密顿判定"""

    @pytest.mark.parametrize("graph", [
        complete(4),
        cycle(5),
        theta(1, 2, 3),
        theta(2, 2, 0),
        path(5),
        star(4),
        MultiGraph.from_pairs([(0, 1), (0, 1), (1, 2), (0, 2)]),
        MultiGraph.from_pairs([], range(3)),
        MultiGraph.from_pairs([(0, 1), (2, 3), (3, 4), (2, 4)], range(6)),
        with_pendants(complete(4), [0, 2]),
    ])
    def test_yes_instances(self, graph):
        """测试存在2页书嵌入的图"""
        _assert_yes(graph)

    @pytest.mark.parametrize("graph", [complete(5), complete_bipartite(3, 3)])
    def test_non_planar_is_no(self, graph):
        """测试非平面图"""
        result = decide_subham(graph)

        assert result.verdict is Verdict.NO
        assert result.embedding is None
        assert result.witness is None

    def test_bowtie_merges_blocks(self):
        """测试两个块在割点处合并"""
        bowtie = MultiGraph.from_pairs([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        result = _assert_yes(bowtie)

        assert result.stats.blocks == 2

    def test_stats(self):
        """测试求解统计"""
        result = _assert_yes(complete(4))
        stats = result.stats.to_dict()

        assert stats["blocks"] == 1
        assert stats["spqr_nodes"]["R"] == 1
        assert stats["max_width"] >= 2
        assert stats["largest_table"] >= 1
        assert "dp" in stats["timings"]

    def test_to_dict(self):
        """测试结果字典"""
        data = decide_subham(theta(1, 1, 1)).to_dict()

        assert data["verdict"] == "yes"
        assert data["embedding"]["order"]
        assert len(data["witness"]["cycle"]) == 5

    def test_parallel_gives_same_verdict(self):
        """测试并行处理同一高度的节点"""
        config = SolverConfig(parallel=True, max_workers=2)

        _assert_yes(theta(1, 2, 3), config)
        _assert_yes(complete(4), config)

    def test_width_cap(self):
        """测试宽度超过上限"""
        with pytest.raises(WidthCapExceededError):
            decide_subham(complete(4), SolverConfig(width_cap=1))

    @pytest.mark.slow
    def test_wheel(self):
        """测试轮图"""
        _assert_yes(wheel(5))

    @pytest.mark.slow
    def test_figure1(self):
        """测试19个顶点的子哈密顿图"""
        graph = figure1()
        result = _assert_yes(graph)

        assert sorted(result.embedding.order) == list(range(19))

    @pytest.mark.slow
    def test_goldner_harary(self):
        """测试最小的非哈密顿极大平面图"""
        result = decide_subham(goldner_harary())

        assert result.verdict is Verdict.NO

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", [1, 2, 3, 4])
    def test_agrees_with_brute_force(self, seed):
        """测试与暴力求解结论一致"""
        graph = generate_instance("planar-deg4", 9, seed=seed)

        result = decide_subham(graph)
        expected = brute_force_subham(graph, cap=9)
        assert result.is_yes == (expected is not None)

    @pytest.mark.parametrize("copies", [3, 4, 5])
    def test_parallel_bundles(self, copies):
        """测试三条以上的平行边束经过P节点判定"""
        result = _assert_yes(MultiGraph.from_pairs([(0, 1)] * copies))

        assert result.stats.to_dict()["spqr_nodes"]["P"] == 1

    def test_k4_witness(self):
        """测试K4经过R节点给出哈密顿圈"""
        result = _assert_yes(complete(4))

        assert sorted(result.witness.cycle) == [0, 1, 2, 3]


def _from_networkx(graph: nx.Graph) -> MultiGraph:
    return MultiGraph.from_pairs(sorted(graph.edges()), range(graph.number_of_nodes()))


def _atlas_indices(low: int, high: int):
    return [
        i for i, g in enumerate(nx.graph_atlas_g())
        if low <= g.number_of_nodes() <= high and nx.is_connected(g)
    ]


def _random_multigraph(seed: int) -> MultiGraph:
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    m = rng.randint(1, 14)
    return MultiGraph.from_pairs([tuple(rng.sample(range(n), 2)) for _ in range(m)], range(n))


def _agrees(graph: MultiGraph) -> bool:
    result = decide_subham(graph)
    expected = brute_force_subham(graph)
    if result.is_yes:
        assert embedding_problems(graph, result.embedding, 2) == []
    return result.is_yes == (expected is not None)


class TestOracleAgreement:
    """测试判定结果与暴力求解一致"""

    @pytest.mark.parametrize("index", _atlas_indices(1, 5))
    def test_small_connected_graphs(self, index):
        """测试至多5个顶点的全部连通图"""
        assert _agrees(_from_networkx(nx.graph_atlas(index)))

    @pytest.mark.slow
    def test_connected_graphs_up_to_seven(self):
        """测试6到7个顶点的全部连通图"""
        wrong = [i for i in _atlas_indices(6, 7) if not _agrees(_from_networkx(nx.graph_atlas(i)))]

        assert wrong == []

    @pytest.mark.slow
    def test_random_multigraphs(self):
        """测试500个随机多重图"""
        wrong = [seed for seed in range(500) if not _agrees(_random_multigraph(seed))]

        assert wrong == []

    @pytest.mark.slow
    def test_planar_degree4_batch(self):
        """测试最大度4的平面图全部判定为是, 超过宽度上限的少于5%"""
        skipped = 0
        for seed in range(200):
            graph = generate_instance("planar-deg4", (20, 50, 100, 200)[seed % 4], seed=seed)
            try:
                result = decide_subham(graph)
            except WidthCapExceededError:
                skipped += 1
                continue
            assert result.is_yes
            assert embedding_problems(graph, result.embedding, 2) == []

        assert skipped * 20 < 200
