"""
实例生成器测试
"""

import pytest

from book_embed.common.exceptions import GenerationError
from book_embed.graph.generator import generate_instance
from book_embed.graph.operations import feedback_edge_number, is_connected, is_cycle
from book_embed.planarity import is_planar


class TestGenerateInstance:
    """测试实例生成"""

    def test_cycle(self):
        """测试环"""
        graph = generate_instance("cycle", 7)

        assert graph.n == 7
        assert graph.m == 7
        assert is_cycle(graph)

    @pytest.mark.parametrize("seed", [0, 1, 2, 3, 4, 5])
    def test_theta(self, seed):
        """测试 θ 图的两极与路径数"""
        graph = generate_instance("theta", 12, seed=seed)

        assert graph.n == 12
        assert graph.m == 13
        assert graph.degree(0) == graph.degree(1) == 3
        assert all(graph.degree(v) == 2 for v in graph.vertices if v > 1)
        assert len(graph.edges_between(0, 1)) <= 1

    @pytest.mark.parametrize("n, fen", [(1, 0), (10, 0), (10, 3), (30, 7)])
    def test_random_fen(self, n, fen):
        """测试反馈边数恰为 k"""
        graph = generate_instance("random-fen", n, seed=42, fen=fen)

        assert graph.n == n
        assert graph.m == n - 1 + fen
        assert is_connected(graph)
        assert feedback_edge_number(graph) == fen
        assert all(len(graph.edges_between(e.u, e.v)) == 1 for e in graph.edges)

    @pytest.mark.parametrize("n", [1, 2, 5, 12, 40])
    def test_planar_degree4(self, n):
        """测试平面, 连通且最大度不超过4"""
        graph = generate_instance("planar-deg4", n, seed=7)

        assert graph.n == n
        assert is_connected(graph)
        assert is_planar(graph)
        assert graph.max_degree() <= 4

    @pytest.mark.parametrize("kind", ["cycle", "theta", "planar-deg4", "random-fen"])
    def test_deterministic(self, kind):
        """测试相同参数生成相同的图"""
        assert generate_instance(kind, 15, seed=3) == generate_instance(kind, 15, seed=3)

    def test_seed_matters(self):
        """测试不同种子一般生成不同的图"""
        graphs = {generate_instance("random-fen", 20, seed=s).edges for s in range(5)}

        assert len(graphs) > 1


class TestGenerationErrors:
    """测试参数错误"""

    @pytest.mark.parametrize("kind, n, fen", [
        ("cycle", 2, 3),
        ("theta", 3, 3),
        ("random-fen", 0, 0),
        ("random-fen", 4, 4),
        ("random-fen", 5, -1),
        ("planar-deg4", 0, 3),
        ("grid", 5, 3),
    ])
    def test_invalid(self, kind, n, fen):
        """测试非法的种类或规模"""
        with pytest.raises(GenerationError):
            generate_instance(kind, n, fen=fen)
