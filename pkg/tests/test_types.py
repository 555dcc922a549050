"""
套索类型测试

测试括号串编码, 不交叉匹配枚举, 类型枚举与组合, 以及SPQR节点类型的运算。
"""

import math

import pytest

from book_embed.common.constants import TYPE_COUNT_BASE
from book_embed.common.exceptions import ContractViolationError
from book_embed.planarity import planar_embedding
from book_embed.spherecut import Subcurve, WeakNoose, build_spherecut, xor_nooses
from book_embed.types import (
    GOOD_TYPES,
    POLE_BOUNDARY,
    Crossing,
    NooseType,
    chain_combine,
    check_compatible,
    combine_types,
    dyck_decode,
    dyck_encode,
    enumerate_triples,
    enumerate_types,
    enumerate_types_by_matchings,
    full_node_type,
    good_level,
    is_bad,
    is_dirty,
    is_dyck_word,
    join_types,
    make_node_type,
    make_type,
    mirror_type,
    noncrossing_matchings,
    swap_poles,
    try_combine,
)
from book_embed.types.dyck import rotate

from .graph_samples import complete, wheel

CURVE_A = Subcurve(0, 1, "a")
CURVE_B = Subcurve(0, 1, "b")
CURVE_C = Subcurve(0, 1, "c")
LENS_AB = WeakNoose(frozenset({CURVE_A, CURVE_B}))
LENS_BC = WeakNoose(frozenset({CURVE_B, CURVE_C}))
LENS_AC = WeakNoose(frozenset({CURVE_A, CURVE_C}))

# 上半圈 1-2-3-4-5 与下半圈 5-6-7-8-1, 两个区域共享中间的曲线 5-11-10-9-1
_FACES = {
    (1, 2): "t1", (2, 3): "t2", (3, 4): "t3", (4, 5): "t4",
    (5, 11): "m1", (10, 11): "m2", (9, 10): "m3", (1, 9): "m4",
    (1, 8): "b1", (7, 8): "b2", (6, 7): "b3", (5, 6): "b4",
}


def _c(u: int, v: int) -> Subcurve:
    return Subcurve(u, v, _FACES[(u, v)])


def _noose(pairs) -> WeakNoose:
    return WeakNoose(frozenset(_c(u, v) for u, v in pairs))


_TOP = [(1, 2), (2, 3), (3, 4), (4, 5)]
_SHARED = [(5, 11), (10, 11), (9, 10), (1, 9)]
_BOTTOM = [(1, 8), (7, 8), (6, 7), (5, 6)]
UPPER = _noose(_TOP + _SHARED)
LOWER = _noose(_BOTTOM + _SHARED)
OUTER = _noose(_TOP + _BOTTOM)

X1, X2, X3 = Crossing(_c(2, 3), 0), Crossing(_c(3, 4), 0), Crossing(_c(4, 5), 0)
X4, X5, X6 = Crossing(_c(5, 6), 0), Crossing(_c(6, 7), 0), Crossing(_c(6, 7), 1)
X7, X8, X9, X10 = Crossing(_c(1, 9), 0), Crossing(_c(9, 10), 0), Crossing(_c(9, 10), 1), Crossing(_c(5, 11), 0)


def _cross_product(o1: WeakNoose, o2: WeakNoose):
    triples = set()
    for x1 in enumerate_types_by_matchings(o1):
        for x2 in enumerate_types_by_matchings(o2):
            x = try_combine(x1, x2)
            if x is not None:
                triples.add((x, x1, x2))
    return frozenset(triples)


def _decomposition_splits(graph):
    decomposition = build_spherecut(graph, planar_embedding(graph), 0)
    for parent, left, right in decomposition.inner_nodes():
        yield tuple(decomposition.arc(a).noose for a in (parent, left, right))


class TestDyck:
    """测试括号串编码"""

    def test_rotate(self):
        """测试循环读取"""
        assert rotate([1, 2, 3, 4], 3) == [3, 4, 1, 2]
        assert rotate([1, 2, 3, 4], 3, "ccw") == [3, 2, 1, 4]
        with pytest.raises(ContractViolationError):
            rotate([1, 2], 5)
        with pytest.raises(ContractViolationError):
            rotate([1, 2], 1, "sideways")

    def test_is_dyck_word(self):
        """测试平衡括号串"""
        assert is_dyck_word("")
        assert is_dyck_word("[[]][]")
        assert not is_dyck_word("][")
        assert not is_dyck_word("[[]")
        assert not is_dyck_word("[x]")

    def test_encode_and_decode(self):
        """测试编码与解码"""
        matching = frozenset({frozenset({0, 3}), frozenset({1, 2})})

        word = dyck_encode(matching, [0, 1, 2, 3])
        assert word == "[[]]"
        assert dyck_decode(word, [0, 1, 2, 3]) == matching

    def test_unmatched_slots_are_skipped(self):
        """测试未匹配的点不产生字符"""
        matching = frozenset({frozenset({1, 4})})

        assert dyck_encode(matching, [0, 1, 2, 3, 4, 5]) == "[]"

    def test_crossing_matching_rejected(self):
        """测试交叉匹配"""
        matching = frozenset({frozenset({0, 2}), frozenset({1, 3})})

        with pytest.raises(ContractViolationError):
            dyck_encode(matching, [0, 1, 2, 3])

    def test_decode_errors(self):
        """测试解码错误"""
        with pytest.raises(ContractViolationError):
            dyck_decode("[]", [0])
        with pytest.raises(ContractViolationError):
            dyck_decode("][", [0, 1])

    @pytest.mark.parametrize("points, expected", [(0, 1), (2, 1), (4, 2), (6, 5), (8, 14), (10, 42)])
    def test_catalan_counts(self, points, expected):
        """测试不交叉完美匹配的个数为卡特兰数"""
        matchings = list(noncrossing_matchings(range(points)))

        assert len(matchings) == expected
        assert len(set(matchings)) == expected

    def test_odd_point_count(self):
        """测试奇数个点没有完美匹配"""
        assert list(noncrossing_matchings(range(5))) == []


class TestNooseType:
    """测试套索类型"""

    def test_empty_and_full(self):
        """测试空类型与满类型"""
        empty = NooseType.empty(LENS_AB)
        full = NooseType.full(LENS_AB)

        assert empty.is_empty and not empty.is_full
        assert full.is_full and not full.is_empty
        assert full.degree(0) == 2
        assert empty.degree(0) == 0

    def test_make_type_with_crossings(self):
        """测试含穿越点的类型"""
        x = make_type(LENS_AB, [(0, Crossing(CURVE_A, 0))], inner=[1])

        assert x.psi == {CURVE_A: 1}
        assert x.degree(0) == 1
        assert x.degree(1) == 2
        assert x.crossings == frozenset({Crossing(CURVE_A, 0)})

    @pytest.mark.parametrize("pairs, inner", [
        ([(0, 5)], []),
        ([(0, Crossing(CURVE_A, 1))], []),
        ([(0, Crossing(CURVE_C, 0))], []),
        ([(0, 1)], [0]),
    ])
    def test_invalid_types(self, pairs, inner):
        """测试结构不合法的类型"""
        with pytest.raises(ContractViolationError):
            make_type(LENS_AB, pairs, inner)

    def test_enumeration_agrees(self):
        """测试两种枚举方式结果一致"""
        by_roles = enumerate_types(LENS_AB)
        by_matchings = enumerate_types_by_matchings(LENS_AB)

        assert by_roles == by_matchings
        assert NooseType.empty(LENS_AB) in by_roles
        assert NooseType.full(LENS_AB) in by_roles
        assert len(by_roles) <= TYPE_COUNT_BASE ** len(LENS_AB)

    def test_enumerated_types_are_valid(self):
        """测试枚举出的类型都通过结构检查"""
        for x in enumerate_types(POLE_BOUNDARY):
            assert x.problems() == []

    def test_encoding_is_canonical(self):
        """测试规范编码区分不同类型"""
        types = enumerate_types(LENS_AB)

        assert len({x.encoding for x in types}) == len(types)


class TestCombine:
    """测试类型组合"""

    def test_empty_with_empty(self):
        """测试空类型与空类型组合"""
        result = combine_types(NooseType.empty(LENS_AB), NooseType.empty(LENS_BC))

        assert result == NooseType.empty(LENS_AC)

    def test_full_only_with_empty(self):
        """测试满类型只能与空类型组合"""
        full = NooseType.full(LENS_AB)

        assert combine_types(full, NooseType.empty(LENS_BC)) == NooseType.full(LENS_AC)
        assert not check_compatible(full, NooseType.full(LENS_BC))

    def test_paths_join_through_shared_subcurve(self):
        """测试两段路径在公共子曲线的穿越点处连接"""
        first = make_type(LENS_AB, [(Crossing(CURVE_A, 0), Crossing(CURVE_B, 0))])
        second = make_type(LENS_BC, [(Crossing(CURVE_B, 0), Crossing(CURVE_C, 0))])

        result = combine_types(first, second)
        assert result.matching == frozenset({frozenset({Crossing(CURVE_A, 0), Crossing(CURVE_C, 0)})})

    def test_crossing_counts_must_agree(self):
        """测试公共子曲线上穿越点个数不一致时不相容"""
        first = make_type(LENS_AB, [(Crossing(CURVE_A, 0), Crossing(CURVE_B, 0))])

        assert not check_compatible(first, NooseType.empty(LENS_BC))
        with pytest.raises(ContractViolationError):
            combine_types(first, NooseType.empty(LENS_BC))

    def test_triples(self):
        """测试相容三元组枚举"""
        triples = enumerate_triples(LENS_AC, LENS_AB, LENS_BC)

        assert triples
        assert (NooseType.empty(LENS_AC), NooseType.empty(LENS_AB), NooseType.empty(LENS_BC)) in triples
        for x, x1, x2 in triples:
            assert x.noose == LENS_AC
            assert combine_types(x1, x2) == x

    def test_triples_require_xor(self):
        """测试父套索必须是两个子套索的异或"""
        with pytest.raises(ContractViolationError):
            enumerate_triples(LENS_AB, LENS_AB, LENS_BC)

    def test_paths_through_vanishing_vertices(self):
        """测试路径经过消失的公共顶点与穿越点连成更长的路径"""
        upper = make_type(UPPER, [(X1, X9), (X2, 5), (4, X3), (X10, 11), (X8, X7)], inner=[2, 10])
        lower = make_type(LOWER, [(X7, 8), (X8, X10), (X9, 11), (5, X4), (X5, X6)], inner=[9, 6])
        expected = make_type(OUTER, [(X1, 8), (X2, X4), (4, X3), (X5, X6)], inner=[2, 5, 6])

        assert combine_types(upper, lower) == expected
        assert combine_types(lower, upper) == expected
        assert list(join_types([upper], [lower])) == [(expected, upper, lower)]

    def test_vanishing_degree_must_sum_to_two(self):
        """测试消失顶点两侧度数之和不为2时不相容"""
        upper = make_type(UPPER, [(X1, X9), (X2, 5), (4, X3), (X10, 11), (X8, X7)], inner=[2])
        lower = make_type(LOWER, [(X7, 8), (X8, X10), (X9, 11), (5, X4), (X5, X6)], inner=[9, 6])

        assert not check_compatible(upper, lower)
        assert list(join_types([upper], [lower])) == []

    def test_combine_is_symmetric(self):
        """测试组合与参数顺序无关"""
        for x1 in enumerate_types(LENS_AB):
            for x2 in enumerate_types(LENS_BC):
                assert try_combine(x1, x2) == try_combine(x2, x1)

    def test_triples_match_cross_product(self):
        """测试分桶枚举与逐对尝试得到同一组三元组"""
        assert enumerate_triples(LENS_AC, LENS_AB, LENS_BC) == _cross_product(LENS_AB, LENS_BC)

    @pytest.mark.slow
    def test_triples_match_cross_product_with_three_curves(self):
        """测试三条子曲线的套索与透镜的分桶枚举"""
        three = WeakNoose(frozenset({Subcurve(0, 2, "f"), Subcurve(1, 2, "g"), CURVE_A}))
        lens = WeakNoose(frozenset({CURVE_A, CURVE_B}))
        parent = xor_nooses(three, lens)

        assert enumerate_triples(parent, three, lens) == _cross_product(three, lens)


class TestCountBounds:
    """测试类型与三元组个数的上界"""

    @pytest.mark.slow
    @pytest.mark.parametrize("graph", [complete(4), wheel(5), wheel(6)])
    def test_type_count_on_arcs(self, graph):
        """测试分解中不超过3条子曲线的套索上类型个数不超过 28^|O|"""
        for nooses in _decomposition_splits(graph):
            for noose in nooses:
                if len(noose) > 3:
                    continue
                types = enumerate_types(noose)
                assert len(types) <= TYPE_COUNT_BASE ** len(noose)
                assert types == enumerate_types_by_matchings(noose)

    @pytest.mark.slow
    @pytest.mark.parametrize("graph", [complete(4), wheel(5), wheel(6)])
    def test_triple_count_on_splits(self, graph):
        """测试无需三角形的分解节点上三元组个数不超过 6(84√14)^k"""
        checked = 0
        splits = list(_decomposition_splits(graph)) + [(LENS_AC, LENS_AB, LENS_BC)]
        for parent, left, right in splits:
            k = max(len(parent), len(left), len(right))
            if k > 3 or xor_nooses(left, right) != parent:
                continue
            triples = enumerate_triples(parent, left, right)
            assert len(triples) <= 6 * (84 * math.sqrt(14)) ** k
            checked += 1

        assert checked > 0


class TestNodeTypes:
    """测试SPQR节点类型"""

    def test_good_types(self):
        """测试三个好类型"""
        assert [good_level(x) for x in GOOD_TYPES] == [0, 1, 2]
        assert is_bad(full_node_type())
        assert not is_dirty(GOOD_TYPES[2])
        assert is_dirty(make_node_type([("s", "l")]))

    @pytest.mark.parametrize("pairs, inner", [
        ([("l", "r'"), ("l'", "r")], []),
        ([("l'", "r")], []),
        ([("x", "s")], []),
        ([("s", "t")], ["s"]),
    ])
    def test_invalid_node_types(self, pairs, inner):
        """测试非法的节点类型"""
        with pytest.raises(ContractViolationError):
            make_node_type(pairs, inner)

    def test_mirror(self):
        """测试左右镜像"""
        x = make_node_type([("s", "l")], inner=["t"])

        assert mirror_type(x) == make_node_type([("s", "r")], inner=["t"])
        assert mirror_type(mirror_type(x)) == x
        for good in GOOD_TYPES:
            assert mirror_type(good) == good

    def test_swap_poles(self):
        """测试交换两极"""
        x = make_node_type([("s", "l")], inner=["t"])

        assert swap_poles(x) == make_node_type([("t", "l")], inner=["s"])
        assert swap_poles(swap_poles(x)) == x

    def test_chain_of_good_types(self):
        """测试好类型的链式组合"""
        for good in GOOD_TYPES:
            step = chain_combine(good, good)
            assert step is not None
            assert step[0] == good

    def test_chain_mismatch(self):
        """测试公共侧边穿越点个数不一致"""
        assert chain_combine(GOOD_TYPES[1], GOOD_TYPES[0]) is None
