"""
平面性测试

测试组合嵌入, 面遍历与加环平面性检测。
"""

import pytest

from book_embed.common.exceptions import ContractViolationError, EmbeddingIntegrityError
from book_embed.graph.models import MultiGraph
from book_embed.planarity import (
    CombinatorialEmbedding,
    NonPlanar,
    cycle_sides,
    faces,
    is_planar,
    planar_embedding,
    planar_with_cycle,
    trace_faces,
)

from .graph_samples import complete, complete_bipartite, cycle, goldner_harary, path, theta, wheel


class TestPlanarEmbedding:
    """测试平面嵌入"""

    @pytest.mark.parametrize("graph, face_count", [
        (complete(4), 4),
        (cycle(5), 2),
        (theta(1, 2, 3), 3),
        (wheel(5), 6),
        (goldner_harary(), 18),
    ])
    def test_euler_formula(self, graph, face_count):
        """测试面数满足欧拉公式"""
        embedding = planar_embedding(graph)

        assert isinstance(embedding, CombinatorialEmbedding)
        assert embedding.face_count == face_count
        assert graph.n - graph.m + embedding.face_count == 2

    def test_non_planar_is_a_value(self):
        """测试非平面图返回结果对象而不是异常"""
        result = planar_embedding(complete(5))

        assert isinstance(result, NonPlanar)
        assert not result
        assert (result.n, result.m) == (5, 10)
        assert not is_planar(complete_bipartite(3, 3))

    def test_parallel_edges_bound_a_face(self):
        """测试平行边之间形成一个二边面"""
        graph = MultiGraph.from_pairs([(0, 1), (0, 1), (1, 2), (0, 2)])
        embedding = planar_embedding(graph)

        assert embedding.face_count == 3
        assert sorted(len(walk) for walk in embedding.faces) == [2, 3, 3]

    def test_every_dart_in_one_face(self):
        """测试每条有向边恰好属于一个面"""
        graph = wheel(4)
        embedding = planar_embedding(graph)

        darts = [dart for walk in embedding.faces for dart in walk]
        assert len(darts) == 2 * graph.m
        assert len(set(darts)) == len(darts)
        for edge_id in graph.edge_ids:
            first, second = embedding.faces_of_edge(edge_id)
            assert first != second

    def test_mirror_keeps_face_count(self):
        """测试镜像嵌入"""
        embedding = planar_embedding(complete(4))
        mirrored = embedding.mirrored()

        assert mirrored.face_count == embedding.face_count
        assert faces(mirrored)

    def test_inconsistent_rotation(self):
        """测试旋转系统与图不一致"""
        graph = cycle(3)
        with pytest.raises(EmbeddingIntegrityError):
            trace_faces(graph, {0: (0,), 1: (0, 1), 2: (1, 2)})
        with pytest.raises(EmbeddingIntegrityError):
            trace_faces(graph, {0: (0, 2), 1: (0, 1)})

    def test_forest_has_one_face_per_component(self):
        """测试树只有一个面"""
        embedding = planar_embedding(path(4))

        assert embedding.face_count == 1


class TestPlanarWithCycle:
    """测试加环平面性"""

    def test_hamiltonian_cycle_of_k4(self):
        """测试K4加上自身的哈密顿圈仍为平面图"""
        assert planar_with_cycle(complete(4), [0, 1, 2, 3])

    def test_square_accepts_both_cycles(self):
        """测试正方形上的两种循环序列"""
        square = cycle(4)

        assert planar_with_cycle(square, [0, 1, 2, 3])
        # 完全图 K4 的两条对角线加上原来的环仍为平面图
        assert planar_with_cycle(square, [0, 2, 1, 3])

    def test_goldner_harary_has_no_planar_cycle(self):
        """测试非哈密顿极大平面图加上任何循环都不再平面"""
        graph = goldner_harary()

        assert not planar_with_cycle(graph, list(range(11)))

    def test_cycle_must_be_permutation(self):
        """测试循环必须是全部顶点的排列"""
        with pytest.raises(ContractViolationError):
            planar_with_cycle(cycle(4), [0, 1])
        with pytest.raises(ContractViolationError):
            planar_with_cycle(cycle(4), [0, 1, 1, 2])
        with pytest.raises(ContractViolationError):
            planar_with_cycle(cycle(4), [0, 1, 2])

    def test_sides_split_chords(self):
        """测试 K4 的两条弦分在哈密顿圈两侧"""
        graph = complete(4)
        sides = cycle_sides(graph, [0, 1, 2, 3])

        chords = [e.id for e in graph.edges if e.ends in ((0, 2), (1, 3))]
        assert set(sides) == set(graph.edge_ids)
        assert set(sides.values()) <= {1, 2}
        assert sides[chords[0]] != sides[chords[1]]

    def test_sides_reject_non_planar(self):
        """测试 G 加上 H 非平面时拒绝"""
        with pytest.raises(ContractViolationError):
            cycle_sides(complete(5), [0, 1, 2, 3, 4])
