"""
球面切分测试

测试子曲线与弱套索, 套索异或, 以及以参考边为根的球面切分分解。
"""

import pytest

from book_embed.common.constants import NodeKind
from book_embed.common.exceptions import ContractViolationError, WidthCapExceededError
from book_embed.graph.generator import generate_instance
from book_embed.graph.operations import blocks, is_cycle
from book_embed.planarity import planar_embedding
from book_embed.spherecut import (
    Subcurve,
    WeakNoose,
    build_spherecut,
    leaf_noose,
    noose_from_edges,
    plan_xor,
    try_noose,
    xor_nooses,
    xor_plan,
)
from book_embed.spqr import build_spqr

from .graph_samples import complete, cycle, goldner_harary, path, wheel

TRIANGLE = WeakNoose(frozenset({
    Subcurve(0, 1, "f"),
    Subcurve(1, 2, "g"),
    Subcurve(0, 2, "h"),
}))
LENS = WeakNoose(frozenset({Subcurve(0, 2, "h"), Subcurve(0, 2, "k")}))

# 两个三角形面 f1 (1,2,8) 与 f2 (4,5,6) 之外, 其余子曲线各在自己的面里
_FACES = {
    (1, 2): "f1", (2, 8): "f1", (1, 8): "f1",
    (4, 5): "f2", (5, 6): "f2", (4, 6): "f2",
    (2, 3): "g23", (3, 4): "g34", (6, 7): "g67", (7, 8): "g78", (1, 5): "h",
}


def _c(u: int, v: int) -> Subcurve:
    return Subcurve(u, v, _FACES[(u, v)])


def _noose(*pairs) -> WeakNoose:
    return WeakNoose(frozenset(_c(u, v) for u, v in pairs))


O_PARENT = _noose((2, 3), (3, 4), (4, 6), (6, 7), (7, 8), (2, 8))
O_LEFT = _noose((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))
O_RIGHT = _noose((1, 5), (5, 6), (6, 7), (7, 8), (1, 8))
O_TRIANGLE_1 = _noose((1, 2), (2, 8), (1, 8))
O_TRIANGLE_2 = _noose((4, 5), (5, 6), (4, 6))


class TestWeakNoose:
    """测试子曲线与弱套索"""

    def test_subcurve_order(self):
        """测试子曲线端点有序"""
        assert Subcurve.between(5, 2, "f") == Subcurve(2, 5, "f")
        assert Subcurve(2, 5, "f").other(5) == 2
        with pytest.raises(ContractViolationError):
            Subcurve(3, 3, "f")

    def test_canonical_walk(self):
        """测试规范遍历从最小顶点出发"""
        assert TRIANGLE.cyclic_order() == (0, 1, 2)
        assert TRIANGLE.vertices == frozenset({0, 1, 2})
        assert len(TRIANGLE) == 3
        assert TRIANGLE.visits_faces_once()

    def test_two_closed_curves_rejected(self):
        """测试两条闭曲线不构成套索"""
        curves = {
            Subcurve(0, 1, "a"), Subcurve(0, 1, "b"),
            Subcurve(2, 3, "a"), Subcurve(2, 3, "b"),
        }

        assert try_noose(curves) is None
        with pytest.raises(ContractViolationError):
            WeakNoose(frozenset(curves))

    def test_open_curve_rejected(self):
        """测试不闭合的曲线"""
        assert try_noose({Subcurve(0, 1, "a"), Subcurve(1, 2, "b")}) is None
        assert try_noose(set()) is None

    def test_xor(self):
        """测试异或为子曲线集合的对称差"""
        result = xor_nooses(TRIANGLE, LENS)

        assert result == WeakNoose(frozenset({
            Subcurve(0, 1, "f"),
            Subcurve(1, 2, "g"),
            Subcurve(0, 2, "k"),
        }))
        assert xor_nooses(TRIANGLE, TRIANGLE) is None

    def test_plan_without_triangles(self):
        """测试剩余为空时只需一步异或"""
        parent = xor_nooses(TRIANGLE, LENS)
        plan = plan_xor(parent, TRIANGLE, LENS)

        assert plan is not None
        assert plan.steps == ((0, 1),)
        assert plan.triangles == ()
        assert plan.result == parent

    def test_plan_with_two_triangles(self):
        """测试父套索需要两个无边三角形补齐"""
        plan = plan_xor(O_PARENT, O_LEFT, O_RIGHT)

        assert xor_nooses(O_LEFT, O_TRIANGLE_1) == WeakNoose(frozenset({
            _c(2, 3), _c(3, 4), _c(4, 5), _c(1, 5), _c(2, 8), _c(1, 8),
        }))
        assert plan is not None
        assert set(plan.triangles) == {O_TRIANGLE_1, O_TRIANGLE_2}
        assert plan.steps == ((0, 2), (1, 3), (4, 5))
        assert plan.result == O_PARENT


class TestNooseFromEdges:
    """测试由边集计算套索"""

    def test_leaf_noose(self):
        """测试单条边的套索"""
        embedding = planar_embedding(complete(4))
        noose = leaf_noose(embedding, 0)

        assert len(noose) == 2
        assert noose.vertices == frozenset(complete(4).edge(0).ends)
        assert noose_from_edges(embedding, {0}) == noose

    def test_complement_gives_same_noose(self):
        """测试边集与其补集被同一个套索分开"""
        graph = wheel(5)
        embedding = planar_embedding(graph)
        inside = {0, 1, 5}

        forward = noose_from_edges(embedding, inside)
        backward = noose_from_edges(embedding, set(graph.edge_ids) - inside)
        assert forward is not None
        assert forward == backward

    def test_disconnected_side(self):
        """测试一侧不能由单一闭曲线分开时返回 None"""
        graph = cycle(6)
        embedding = planar_embedding(graph)

        assert noose_from_edges(embedding, {0, 3}) is None


class TestSphereCutDecomposition:
    """测试球面切分分解"""

    @pytest.mark.parametrize("graph", [complete(4), wheel(6), cycle(5), goldner_harary()])
    def test_arcs_are_consistent(self, graph):
        """测试每条弧的套索分开其边集, 每个内部节点都有异或方案"""
        embedding = planar_embedding(graph)
        decomposition = build_spherecut(graph, embedding, 0)

        assert set(decomposition.leaves()) == set(graph.edge_ids) - {0}
        assert decomposition.arc(decomposition.root_arc).edges == frozenset(graph.edge_ids) - {0}
        for parent, left, right in decomposition.inner_nodes():
            arc = decomposition.arc(parent)
            assert arc.edges == decomposition.arc(left).edges | decomposition.arc(right).edges
            assert noose_from_edges(embedding, arc.edges) == arc.noose
            plan = xor_plan(decomposition, parent, left, right)
            assert plan.result == arc.noose
            assert len(plan.steps) <= 3
            assert len(plan.triangles) <= 2

    def test_arc_count(self):
        """测试二叉分解的弧数"""
        graph = wheel(5)
        decomposition = build_spherecut(graph, planar_embedding(graph), 0)

        leaves = graph.m - 1
        assert len(decomposition.arcs) == 2 * leaves - 1
        assert len(decomposition.inner_nodes()) == leaves - 1

    def test_width_cap(self):
        """测试宽度上限"""
        graph = complete(4)
        embedding = planar_embedding(graph)

        decomposition = build_spherecut(graph, embedding, 0)
        assert decomposition.width >= 2
        with pytest.raises(WidthCapExceededError):
            build_spherecut(graph, embedding, 0, width_cap=1)

    def test_to_dict(self):
        """测试字典转储"""
        graph = complete(4)
        data = build_spherecut(graph, planar_embedding(graph), 2).to_dict()

        assert data["reference"] == 2
        assert data["width"] >= 2
        assert len(data["arcs"]) == 2 * (graph.m - 1) - 1

    def test_requires_biconnected(self):
        """测试骨架必须二连通"""
        graph = path(4)

        with pytest.raises(ContractViolationError):
            build_spherecut(graph, planar_embedding(graph), 0)

    @pytest.mark.slow
    def test_plans_on_generated_skeletons(self):
        """测试生成实例中每个R节点骨架的分解都有至多三步的异或方案"""
        checked = 0
        for seed in range(20):
            graph = generate_instance("planar-deg4", 40, seed=seed)
            for block in blocks(graph).blocks:
                if block.n < 4 or is_cycle(block):
                    continue
                tree = build_spqr(block, min(block.edge_ids))
                for node in tree.nodes.values():
                    if node.kind is not NodeKind.R:
                        continue
                    skeleton = node.skeleton
                    decomposition = build_spherecut(skeleton, planar_embedding(skeleton), node.reference)
                    for parent, left, right in decomposition.inner_nodes():
                        plan = xor_plan(decomposition, parent, left, right)
                        assert plan.result == decomposition.arc(parent).noose
                        assert len(plan.steps) <= 3
                        assert len(plan.triangles) <= 2
                        checked += 1

        assert checked > 0
