"""
P节点类型表

子节点从左到右排成一列, 相邻两个子节点共享一条侧边。组合后的类型只由坏类型子序列
决定: 枚举至多8个坏类型组成的相容序列, 计算可以插入的好类型, 再用饱和匹配判断
能否把序列和剩余子节点分配给全部子节点。
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ..common.constants import MAX_BAD_TYPES
from ..common.exceptions import ContractViolationError, InternalInconsistencyError
from ..types.models import NooseType
from ..types.node_types import GOOD_TYPES, chain_combine, count_left, count_right, is_bad
from .matching import saturating_matching
from .models import PathSystem, TypeTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BadSequence:
    """
    坏类型序列

    Attributes:
        types: 依次排列的坏类型
        combined: 整个序列的组合类型
        gaps: 相邻两个类型之间的穿越点个数
    """
    types: Tuple[NooseType, ...]
    combined: NooseType
    gaps: FrozenSet[int]

    def insertable(self) -> Dict[int, str]:
        """可插入的好类型: x -> 插入位置 ('front', 'end' 或 'gap:i')"""
        places: Dict[int, str] = {}
        for i in range(len(self.types) - 1):
            places.setdefault(count_right(self.types[i]), f"gap:{i}")
        places.setdefault(count_left(self.types[0]), "front")
        places.setdefault(count_right(self.types[-1]), "end")
        return places


class PNodeSolver:
    """
    计算一个P节点的类型表

    Args:
        children: 子节点编号 -> 类型表
    """

    def __init__(self, children: Dict[int, TypeTable]):
        if not children:
            raise ContractViolationError("P节点没有子节点", "p_node_types")
        self.children = children
        self.child_ids = sorted(children)
        self.bad_types: List[NooseType] = sorted(
            {x for table in children.values() for x in table if is_bad(x)},
            key=NooseType.sort_key,
        )
        self.holders: Dict[NooseType, List[int]] = {
            x: [c for c in self.child_ids if x in children[c]] for x in self.bad_types
        }
        self.sequences = 0

    def _matchable(self, types: Tuple[NooseType, ...], required: FrozenSet[int] = frozenset()) -> Optional[Dict]:
        adjacency = {i: self.holders[x] for i, x in enumerate(types)}
        return saturating_matching(range(len(types)), adjacency, required)

    def enumerate_sequences(self) -> List[BadSequence]:
        """深度优先枚举可匹配的相容坏类型序列 (非空)"""
        limit = min(MAX_BAD_TYPES, len(self.child_ids))
        found: List[BadSequence] = []
        seen: Set[Tuple] = set()
        stack: List[BadSequence] = []
        for x in reversed(self.bad_types):
            stack.append(BadSequence((x,), x, frozenset()))

        while stack:
            sequence = stack.pop()
            key = (
                sequence.combined,
                sequence.gaps,
                count_left(sequence.types[0]),
                count_right(sequence.types[-1]),
                tuple(sorted(Counter(sequence.types).items(), key=lambda kv: kv[0].sort_key())),
            )
            if key in seen:
                continue
            seen.add(key)
            if self._matchable(sequence.types) is None:
                continue
            found.append(sequence)
            self.sequences += 1
            if len(sequence.types) >= limit:
                continue
            for x in reversed(self.bad_types):
                step = chain_combine(sequence.combined, x)
                if step is None:
                    continue
                gap = count_right(sequence.types[-1])
                stack.append(BadSequence(sequence.types + (x,), step[0], sequence.gaps | {gap}))
        return found

    def solve(self) -> TypeTable:
        table = TypeTable()
        for good in GOOD_TYPES:
            if all(good in self.children[c] for c in self.child_ids):
                order = [(c, good) for c in self.child_ids]
                table.add(good, self._witness(order, good))

        for sequence in self.enumerate_sequences():
            if len(sequence.types) > MAX_BAD_TYPES:
                raise InternalInconsistencyError("相容序列中的坏类型超过8个", "p_node_types")
            if sequence.combined in table:
                continue
            places = sequence.insertable()
            fillers = {
                c: next((x for x in sorted(places) if GOOD_TYPES[x] in self.children[c]), None)
                for c in self.child_ids
            }
            required = frozenset(c for c, x in fillers.items() if x is None)
            matching = self._matchable(sequence.types, required)
            if matching is None:
                continue
            order = self._arrange(sequence, matching, fillers, places)
            table.add(sequence.combined, self._witness(order, sequence.combined))

        logger.debug("P节点: %d 个子节点, %d 个坏类型序列, %d 个类型",
                     len(self.child_ids), self.sequences, len(table))
        return table

    def _arrange(
        self,
        sequence: BadSequence,
        matching: Dict,
        fillers: Dict[int, Optional[int]],
        places: Dict[int, str],
    ) -> List[Tuple[int, NooseType]]:
        """把坏类型与好类型排成完整的子节点序列"""
        matched = set(matching.values())
        extra: Dict[str, List[Tuple[int, NooseType]]] = {}
        for c in self.child_ids:
            if c in matched:
                continue
            level = fillers[c]
            if level is None:
                raise InternalInconsistencyError(f"子节点 {c} 没有可插入的好类型", "p_node_types")
            extra.setdefault(places[level], []).append((c, GOOD_TYPES[level]))

        order: List[Tuple[int, NooseType]] = list(extra.get("front", []))
        for i, x in enumerate(sequence.types):
            order.append((matching[i], x))
            order.extend(extra.get(f"gap:{i}", []))
        order.extend(extra.get("end", []))
        return order

    def _witness(self, order: List[Tuple[int, NooseType]], expected: NooseType) -> PathSystem:
        """
        沿子节点序列拼接路径系统

        Raises:
            InternalInconsistencyError: 拼接得到的类型与期望不符
        """
        child, current = order[0]
        paths = self.children[child].witness(current)
        for child, x in order[1:]:
            step = chain_combine(current, x)
            if step is None:
                raise InternalInconsistencyError("插入好类型后序列不再相容", "p_node_types")
            current, left_map, right_map = step
            paths = paths.relabel(left_map).merge(self.children[child].witness(x).relabel(right_map))
        if current != expected:
            raise InternalInconsistencyError(f"序列类型 {current!r} 与 {expected!r} 不符", "p_node_types")
        return paths


def p_node_types(children: Dict[int, TypeTable]) -> Tuple[TypeTable, int]:
    """
    P节点的类型表

    Args:
        children: 子节点编号 -> 类型表

    Returns:
        Tuple[TypeTable, int]: 类型表与枚举的序列数

    Raises:
        ContractViolationError: 没有子节点
    """
    solver = PNodeSolver(children)
    return solver.solve(), solver.sequences
