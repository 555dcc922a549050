"""
Q节点类型表

单条实边 s-t 的区域以两极和至多四个穿越点为边界。一个节点类型可实现, 当且仅当
能把 S 中的极点安排进某些路径, 使所有路径弦与实边 s-t 在六点圆周上两两不交叉。
表只依赖于记号, 对每个Q节点按其两极实例化。
"""

import itertools
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..common.constants import NodeKind, POLE_S, POLE_T
from ..common.exceptions import ContractViolationError
from ..spqr.models import SpqrNode
from ..types.enumerate import enumerate_types
from ..types.models import NooseType, Token, pair_tokens, slot_order
from ..types.node_types import POLE_BOUNDARY, SIDE_L, SIDE_R
from .models import PathSystem, TypeTable

Chord = Tuple[Token, Token]

# 圆周上全部六个位置: s, l, l', t, r', r
_CIRCLE = slot_order(POLE_BOUNDARY, {SIDE_L: 2, SIDE_R: 2})
_POSITION = {token: i for i, token in enumerate(_CIRCLE)}


def _crosses(first: Chord, second: Chord) -> bool:
    a, b = sorted((_POSITION[first[0]], _POSITION[first[1]]))
    c, d = sorted((_POSITION[second[0]], _POSITION[second[1]]))
    if len({a, b, c, d}) < 4:
        return False
    return a < c < b < d or c < a < d < b


def _chords(paths: Sequence[Tuple[Token, ...]]) -> List[Chord]:
    chords: List[Chord] = [(POLE_S, POLE_T)]
    for path in paths:
        chords.extend(zip(path, path[1:]))
    return chords


def _non_crossing(paths: Sequence[Tuple[Token, ...]]) -> bool:
    chords = _chords(paths)
    return not any(
        _crosses(chords[i], chords[j])
        for i in range(len(chords))
        for j in range(i + 1, len(chords))
    )


def _realize(x: NooseType) -> Optional[PathSystem]:
    """为类型寻找路径系统, 不可实现时返回 None"""
    if x.is_full:
        return PathSystem.cycle((POLE_S, POLE_T))
    if not x.matching:
        return PathSystem() if x.is_empty else None

    pairs = [pair_tokens(pair) for pair in sorted(x.matching, key=lambda p: sorted(map(repr, p)))]
    poles = sorted(x.inner)
    # 每个内部极点选择所在路径, 同一路径上的多个极点尝试两种顺序
    for owners in itertools.product(range(len(pairs)), repeat=len(poles)):
        for order in itertools.permutations(poles):
            paths = []
            for index, (a, b) in enumerate(pairs):
                inner = tuple(p for p in order if owners[poles.index(p)] == index)
                paths.append((a,) + inner + (b,))
            if _non_crossing(paths):
                return PathSystem(tuple(paths))
    return None


@lru_cache(maxsize=1)
def q_table_template() -> Tuple[Tuple[NooseType, PathSystem], ...]:
    """以记号 s, t 表示的Q节点类型表, 按规范编码排序"""
    found = []
    for x in sorted(enumerate_types(POLE_BOUNDARY), key=NooseType.sort_key):
        paths = _realize(x)
        if paths is not None:
            found.append((x, paths))
    return tuple(found)


def q_node_types(node: SpqrNode) -> TypeTable:
    """
    Q节点的类型表, 路径系统中的极点换成真实顶点

    Raises:
        ContractViolationError: 不是Q叶子
    """
    if node.kind is not NodeKind.Q or node.children:
        raise ContractViolationError(f"节点 {node.id} 不是Q叶子", "q_node_types")
    s, t = node.poles
    poles: Dict[str, int] = {POLE_S: s, POLE_T: t}
    return TypeTable({x: paths.map_vertices(poles) for x, paths in q_table_template()})
