"""
暴力求解与校验测试

测试书嵌入校验, 固定书脊顺序的页分配, 以及2页与 ℓ 页的穷举求解。
"""

import pytest

from book_embed.common.exceptions import ContractViolationError, EmbeddingIntegrityError, OracleCapError
from book_embed.graph.models import BookEmbedding, Edge, HamiltonianWitness
from book_embed.oracle import (
    brute_force_book_embedding,
    brute_force_book_thickness,
    brute_force_subham,
    check_embedding,
    crossing_pairs,
    embedding_problems,
    pages_given_order,
    verify_embedding,
    verify_witness,
)
from book_embed.oracle.verify import interleaves

from .graph_samples import (
    complete,
    complete_bipartite,
    cycle,
    figure1,
    figure1_embedding,
    goldner_harary,
    path,
    theta,
    wheel,
)


class TestVerify:
    """测试书嵌入校验"""

    def test_interleaves(self):
        """测试严格交错"""
        assert interleaves((0, 2), (1, 3))
        assert interleaves((1, 3), (0, 2))
        assert not interleaves((0, 3), (1, 2))
        assert not interleaves((0, 1), (1, 2))
        assert not interleaves((0, 2), (2, 3))

    def test_crossing_pairs(self):
        """测试冲突边对"""
        edges = [Edge(0, 0, 2), Edge(1, 1, 3), Edge(2, 0, 3)]
        position = {v: v for v in range(4)}

        assert crossing_pairs(edges, position) == [(0, 1)]

    def test_k4_on_two_pages(self):
        """测试K4的2页嵌入"""
        graph = complete(4)
        pages = {e.id: 2 if e.ends == (1, 3) else 1 for e in graph.edges}
        embedding = BookEmbedding((0, 1, 2, 3), pages)

        assert verify_embedding(graph, embedding)
        assert not verify_embedding(graph, BookEmbedding((0, 1, 2, 3), {e: 1 for e in graph.edge_ids}))

    def test_problem_messages(self):
        """测试问题描述"""
        graph = cycle(4)

        assert embedding_problems(graph, BookEmbedding((0, 1, 2), {})) == ["书脊顺序不是全部顶点的排列"]
        assert embedding_problems(graph, BookEmbedding((0, 1, 2, 2), {})) == ["书脊顺序不是全部顶点的排列"]
        assert embedding_problems(graph, BookEmbedding((0, 1, 2, 3), {0: 1})) == ["页分配没有恰好覆盖全部边"]
        out_of_range = BookEmbedding((0, 1, 2, 3), {0: 1, 1: 1, 2: 1, 3: 3})
        assert embedding_problems(graph, out_of_range, 2) == ["边 3 的页码 3 超出范围"]
        assert embedding_problems(graph, out_of_range, None) == []
        zero_page = BookEmbedding((0, 1, 2, 3), {0: 0, 1: 1, 2: 1, 3: 1})
        assert embedding_problems(graph, zero_page, None)

    def test_check_embedding_raises(self):
        """测试校验失败时抛出异常"""
        graph = complete(4)
        embedding = BookEmbedding((0, 1, 2, 3), {e: 1 for e in graph.edge_ids})

        with pytest.raises(EmbeddingIntegrityError):
            check_embedding(graph, embedding)

    def test_figure1_fixture(self):
        """测试夹具中的19个顶点的2页嵌入"""
        graph = figure1()
        embedding = figure1_embedding()

        assert embedding_problems(graph, embedding, 2) == []
        assert verify_witness(graph, HamiltonianWitness(embedding.order))

    def test_witness(self):
        """测试子哈密顿见证"""
        assert verify_witness(complete(4), HamiltonianWitness((0, 1, 2, 3)))
        assert not verify_witness(complete(4), HamiltonianWitness((0, 1, 2)))
        assert not verify_witness(goldner_harary(), HamiltonianWitness(tuple(range(11))))


class TestPagesGivenOrder:
    """测试固定书脊顺序的页分配"""

    def test_one_page_for_outerplanar_order(self):
        """测试环在自然顺序下只需一页"""
        assignment = pages_given_order(cycle(5), (0, 1, 2, 3, 4), 1)

        assert assignment == {e: 1 for e in range(5)}

    def test_crossing_chords(self):
        """测试交叉的对角线"""
        graph = complete(4)

        assert pages_given_order(graph, (0, 1, 2, 3), 1) is None
        assignment = pages_given_order(graph, (0, 1, 2, 3), 2)
        assert assignment is not None
        assert verify_embedding(graph, BookEmbedding((0, 1, 2, 3), assignment))

    def test_odd_conflict_cycle(self):
        """测试冲突图含奇圈时2页不够"""
        graph = complete(5)

        assert pages_given_order(graph, (0, 1, 2, 3, 4), 2) is None
        assignment = pages_given_order(graph, (0, 1, 2, 3, 4), 3)
        assert assignment is not None
        assert verify_embedding(graph, BookEmbedding((0, 1, 2, 3, 4), assignment), 3)


class TestBruteForce:
    """测试穷举求解"""

    @pytest.mark.parametrize("graph", [complete(4), cycle(6), theta(1, 2, 2), wheel(5), path(4)])
    def test_yes_instances(self, graph):
        """测试存在2页嵌入的图"""
        embedding = brute_force_subham(graph)

        assert embedding is not None
        assert verify_embedding(graph, embedding)

    @pytest.mark.parametrize("graph", [complete(5), complete_bipartite(3, 3)])
    def test_no_instances(self, graph):
        """测试不存在2页嵌入的图"""
        assert brute_force_subham(graph) is None

    def test_parallel_search(self):
        """测试并行枚举"""
        assert brute_force_subham(wheel(6), parallel=True, max_workers=2) is not None
        assert brute_force_subham(complete(5), parallel=True, max_workers=2) is None

    def test_tiny_graphs(self):
        """测试至多两个顶点"""
        embedding = brute_force_subham(path(2))

        assert embedding.order == (0, 1)
        assert embedding.pages == {0: 1}

    def test_cap(self):
        """测试规模上限"""
        with pytest.raises(OracleCapError):
            brute_force_subham(cycle(12))
        with pytest.raises(OracleCapError):
            brute_force_book_embedding(cycle(9), 3)
        assert brute_force_subham(cycle(12), cap=12) is not None

    def test_multi_page(self):
        """测试 ℓ 页穷举"""
        graph = complete(5)

        assert brute_force_book_embedding(graph, 2) is None
        embedding = brute_force_book_embedding(graph, 3)
        assert embedding is not None
        assert verify_embedding(graph, embedding, 3)

    @pytest.mark.parametrize("graph, thickness", [
        (path(1), 0),
        (path(5), 1),
        (cycle(5), 1),
        (complete(4), 2),
        (complete(5), 3),
        (complete_bipartite(3, 3), 3),
    ])
    def test_book_thickness(self, graph, thickness):
        """测试书厚度"""
        pages, embedding = brute_force_book_thickness(graph)

        assert pages == thickness
        assert verify_embedding(graph, embedding, max(pages, 1))

    @pytest.mark.slow
    def test_goldner_harary(self):
        """测试11个顶点的非哈密顿极大平面图"""
        assert brute_force_subham(goldner_harary()) is None

    def test_order_must_be_permutation(self):
        """测试书脊顺序必须是顶点排列"""
        with pytest.raises(ContractViolationError):
            pages_given_order(cycle(4), (0, 1, 2), 2)
        with pytest.raises(ContractViolationError):
            pages_given_order(cycle(4), (0, 1, 2, 3), 0)
