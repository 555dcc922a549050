"""
类型组合

两个类型相容时, 它们的区域可以拼成异或套索围成的区域, 组合类型由两侧匹配
拼接出的路径决定。另外提供按子曲线与顶点映射改写类型的工具。

同一对套索上的大量组合共用一个 Junction: 异或结果、公共子曲线与公共顶点只算一次。
"""

import itertools
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from ..common.exceptions import ContractViolationError
from ..spherecut.models import Subcurve, WeakNoose
from ..spherecut.nooses import xor_nooses
from .enumerate import enumerate_types
from .models import Crossing, NooseType, Pair, Token, crossing_free, make_pair

logger = logging.getLogger(__name__)

Triple = Tuple[NooseType, NooseType, NooseType]

# 连接键: 公共子曲线上的穿越点个数, 消失顶点的度数, 保留公共顶点的度数
JoinKey = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


def _join_paths(pairs: Iterable[Pair]) -> Optional[Tuple[List[Pair], bool]]:
    """
    把两侧匹配的并看作多重图, 求路径端点对

    Returns:
        Optional[Tuple[List[Pair], bool]]: (端点对, 是否恰好一个圈); 有度数大于2的点,
        或圈与其他分量并存时返回 None
    """
    adjacency: Dict[Token, List[int]] = defaultdict(list)
    edges: List[Tuple[Token, Token]] = []
    for pair in pairs:
        a, b = tuple(pair)
        adjacency[a].append(len(edges))
        adjacency[b].append(len(edges))
        edges.append((a, b))
    if any(len(ids) > 2 for ids in adjacency.values()):
        return None

    used: Set[int] = set()
    endpoints: List[Pair] = []
    for start, ids in adjacency.items():
        if len(ids) != 1 or ids[0] in used:
            continue
        token, edge_id = start, ids[0]
        while True:
            used.add(edge_id)
            a, b = edges[edge_id]
            token = b if a == token else a
            following = [e for e in adjacency[token] if e not in used]
            if not following:
                break
            edge_id = following[0]
        endpoints.append(make_pair(start, token))

    if len(used) == len(edges):
        return endpoints, False
    # 剩下的边全部位于圈上
    if endpoints:
        return None
    remaining = [e for e in range(len(edges)) if e not in used]
    seen: Set[int] = set()
    stack = [remaining[0]]
    while stack:
        edge_id = stack.pop()
        if edge_id in seen:
            continue
        seen.add(edge_id)
        for token in edges[edge_id]:
            stack.extend(adjacency[token])
    if len(seen) != len(remaining):
        return None
    return [], True


class Junction:
    """
    两个套索的拼接处

    Attributes:
        noose: 异或结果 O1 ⊕ O2
        boundary: 结果套索的边界顶点
        shared: 公共子曲线, 有序
        vanishing: 两侧共有且不在结果边界上的顶点
        kept: 两侧共有且仍在结果边界上的顶点
    """

    def __init__(self, first: WeakNoose, second: WeakNoose, noose: WeakNoose):
        self.noose = noose
        self.boundary = noose.vertices
        common = first.vertices & second.vertices
        self.shared: Tuple[Subcurve, ...] = tuple(sorted(first.subcurves & second.subcurves))
        self.vanishing: Tuple[Any, ...] = tuple(sorted(common - self.boundary))
        self.kept: Tuple[Any, ...] = tuple(sorted(common & self.boundary))

    def key(self, x: NooseType) -> JoinKey:
        """第二侧类型的连接键"""
        return (
            tuple(x.psi_of(c) for c in self.shared),
            tuple(x.degree(v) for v in self.vanishing),
            tuple(x.degree(v) for v in self.kept),
        )

    def partner_keys(self, x: NooseType) -> Iterator[JoinKey]:
        """
        第一侧类型可以配对的全部连接键

        消失顶点两侧度数之和恰为2, 保留的公共顶点之和不超过2。
        """
        psi = tuple(x.psi_of(c) for c in self.shared)
        vanishing = tuple(2 - x.degree(v) for v in self.vanishing)
        if any(d < 0 for d in vanishing):
            return
        ranges = [range(3 - x.degree(v)) for v in self.kept]
        for kept in itertools.product(*ranges):
            yield psi, vanishing, kept

    def combine(self, first: NooseType, second: NooseType) -> Optional[NooseType]:
        """
        在这个拼接处组合两个类型, 不相容时返回 None

        相容条件: 共享子曲线上穿越点个数一致; 消失的边界顶点在两侧度数之和恰为2,
        保留的边界顶点不超过2; 匹配之并无圈, 或恰为一个圈且所有保留的边界顶点度数
        为2; 满类型只能与空类型组合。
        """
        boundary = self.boundary
        if first.is_full or second.is_full:
            full, other = (first, second) if first.is_full else (second, first)
            if other.is_empty and boundary <= full.noose.vertices:
                return NooseType.full(self.noose)
            return None

        for curve in self.shared:
            if first.psi_of(curve) != second.psi_of(curve):
                return None
        for vertex in self.vanishing:
            if first.degree(vertex) + second.degree(vertex) != 2:
                return None
        for vertex in self.kept:
            if first.degree(vertex) + second.degree(vertex) > 2:
                return None

        joined = _join_paths(itertools.chain(first.matching, second.matching))
        if joined is None:
            return None
        endpoints, is_cycle = joined
        inner = frozenset(v for v in boundary if first.degree(v) + second.degree(v) == 2)
        if is_cycle:
            if len(inner) == len(boundary):
                return NooseType.full(self.noose)
            return None

        result = NooseType(self.noose, frozenset(endpoints), inner)
        if not crossing_free(result.matching, result.order):
            logger.debug("组合结果的匹配交叉, 舍弃: %r + %r", first, second)
            return None
        return result


@lru_cache(maxsize=8192)
def junction(first: WeakNoose, second: WeakNoose) -> Optional[Junction]:
    """两个套索的拼接处; 异或不是弱套索时返回 None"""
    noose = xor_nooses(first, second)
    if noose is None:
        return None
    return Junction(first, second, noose)


def try_combine(first: NooseType, second: NooseType) -> Optional[NooseType]:
    """组合两个类型, 不相容时返回 None"""
    place = junction(first.noose, second.noose)
    if place is None:
        return None
    return place.combine(first, second)


def check_compatible(first: NooseType, second: NooseType) -> bool:
    """两个类型能否组合"""
    return try_combine(first, second) is not None


def combine_types(first: NooseType, second: NooseType) -> NooseType:
    """
    组合两个相容类型

    Raises:
        ContractViolationError: 两个类型不相容
    """
    result = try_combine(first, second)
    if result is None:
        raise ContractViolationError(f"类型不相容: {first!r}, {second!r}", "combine_types")
    return result


def join_types(
    first_types: Iterable[NooseType],
    second_types: Iterable[NooseType],
) -> Iterator[Triple]:
    """
    两组类型的散列连接

    第二组按连接键分桶, 第一组的每个类型只与可以配对的桶内类型尝试组合。
    两组类型分别位于同一个套索上。

    Yields:
        Triple: (组合结果, 第一个类型, 第二个类型)
    """
    second_list = list(second_types)
    first_list = list(first_types)
    if not first_list or not second_list:
        return
    place = junction(first_list[0].noose, second_list[0].noose)
    if place is None:
        return

    buckets: Dict[JoinKey, List[NooseType]] = defaultdict(list)
    full_second: List[NooseType] = []
    empty_second: List[NooseType] = []
    for x2 in second_list:
        if x2.is_full:
            full_second.append(x2)
            continue
        if x2.is_empty:
            empty_second.append(x2)
        buckets[place.key(x2)].append(x2)

    for x1 in first_list:
        if x1.is_full:
            candidates: Iterable[NooseType] = empty_second
        else:
            candidates = [x2 for key in place.partner_keys(x1) for x2 in buckets.get(key, ())]
            if x1.is_empty:
                candidates = candidates + full_second
        for x2 in candidates:
            result = place.combine(x1, x2)
            if result is not None:
                yield result, x1, x2


def enumerate_triples(o: WeakNoose, o1: WeakNoose, o2: WeakNoose) -> FrozenSet[Triple]:
    """
    枚举全部相容三元组 (X, X1, X2)

    Raises:
        ContractViolationError: o 不是 o1 与 o2 的异或
    """
    if xor_nooses(o1, o2) != o:
        raise ContractViolationError("o 必须等于 o1 ⊕ o2", "enumerate_triples")
    return frozenset(join_types(enumerate_types(o1), enumerate_types(o2)))


def crossing_map(
    x: NooseType,
    subcurve_map: Mapping[Subcurve, Subcurve],
    vertex_map: Mapping[Any, Any],
) -> Dict[Crossing, Crossing]:
    """
    穿越点在改名后的位置

    子曲线的较小端点改名后变成较大端点时, 序号反向。
    """
    result: Dict[Crossing, Crossing] = {}
    for crossing in x.crossings:
        curve = crossing.subcurve
        target = subcurve_map.get(curve, curve)
        low = vertex_map.get(curve.low, curve.low)
        high = vertex_map.get(curve.high, curve.high)
        if {low, high} != {target.low, target.high}:
            raise ContractViolationError(f"子曲线 {curve} 与 {target} 的端点不对应", "crossing_map")
        index = crossing.index if low == target.low else x.psi_of(curve) - 1 - crossing.index
        result[crossing] = Crossing(target, index)
    return result


def relabel_type(
    x: NooseType,
    subcurve_map: Mapping[Subcurve, Subcurve],
    vertex_map: Mapping[Any, Any],
) -> Tuple[NooseType, Dict[Crossing, Crossing]]:
    """
    按映射改写类型

    Args:
        x: 原类型
        subcurve_map: 子曲线映射, 未出现的子曲线保持不变
        vertex_map: 顶点映射, 未出现的顶点保持不变

    Returns:
        Tuple[NooseType, Dict[Crossing, Crossing]]: 新类型与穿越点映射

    Raises:
        ContractViolationError: 映射前后子曲线端点不对应
    """
    noose = WeakNoose(frozenset(subcurve_map.get(c, c) for c in x.noose.subcurves))
    crossings = crossing_map(x, subcurve_map, vertex_map)

    def token(t: Token) -> Token:
        if isinstance(t, Crossing):
            return crossings[t]
        return vertex_map.get(t, t)

    matching = frozenset(make_pair(*(token(t) for t in pair)) for pair in x.matching)
    inner = frozenset(vertex_map.get(v, v) for v in x.inner)
    return NooseType(noose, matching, inner), crossings
