"""
类型枚举

按角色逐槽位枚举套索上的全部类型: 边界顶点取 未使用/开/闭/内部 四种角色,
每条子曲线上放 0 至 2 个穿越点且每个穿越点取 开/闭 两种角色 (共 1+2+4=7 种),
只保留匹配槽位构成平衡括号串的组合。
"""

import itertools
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Tuple

from ..common.constants import MAX_CROSSINGS_PER_SUBCURVE
from ..spherecut.models import Subcurve, WeakNoose
from .dyck import CLOSE, OPEN, dyck_decode, noncrossing_matchings
from .models import Crossing, NooseType, Token, slot_order

# 顶点角色: 未使用, 内部, 开, 闭
UNUSED, INNER = ".", "o"
VERTEX_ROLES = (UNUSED, INNER, OPEN, CLOSE)
CROSSING_ROLES = (OPEN, CLOSE)


def psi_assignments(noose: WeakNoose) -> Iterator[Dict[Subcurve, int]]:
    """每条子曲线上的穿越点个数的全部组合"""
    curves = sorted(noose.subcurves)
    for counts in itertools.product(range(MAX_CROSSINGS_PER_SUBCURVE + 1), repeat=len(curves)):
        yield {c: k for c, k in zip(curves, counts) if k}


def _role_words(slots: Tuple[Token, ...]) -> Iterator[Tuple[str, ...]]:
    """逐槽位分配角色, 按括号深度剪枝"""
    roles: List[str] = []
    total = len(slots)

    def extend(index: int, depth: int) -> Iterator[Tuple[str, ...]]:
        if depth > total - index:
            return
        if index == total:
            if depth == 0:
                yield tuple(roles)
            return
        options = CROSSING_ROLES if isinstance(slots[index], Crossing) else VERTEX_ROLES
        for role in options:
            if role == CLOSE and depth == 0:
                continue
            step = 1 if role == OPEN else -1 if role == CLOSE else 0
            roles.append(role)
            yield from extend(index + 1, depth + step)
            roles.pop()

    yield from extend(0, 0)


@lru_cache(maxsize=4096)
def enumerate_types(noose: WeakNoose) -> FrozenSet[NooseType]:
    """
    枚举套索上全部结构合法的类型

    Args:
        noose: 弱套索

    Returns:
        FrozenSet[NooseType]: 无重复, 至多 28^|O| 个
    """
    found = set()
    for psi in psi_assignments(noose):
        slots = slot_order(noose, psi)
        for roles in _role_words(slots):
            matched = [(role, token) for role, token in zip(roles, slots) if role in (OPEN, CLOSE)]
            matching = dyck_decode("".join(r for r, _ in matched), [t for _, t in matched])
            inner = frozenset(token for role, token in zip(roles, slots) if role == INNER)
            found.add(NooseType(noose, matching, inner))
    return frozenset(found)


def enumerate_types_by_matchings(noose: WeakNoose) -> FrozenSet[NooseType]:
    """
    另一种枚举方式: 先选端点与内部顶点, 再枚举端点的不交叉完美匹配

    与 enumerate_types 互为对照。
    """
    vertices = sorted(noose.vertices)
    found = set()
    for psi in psi_assignments(noose):
        slots = slot_order(noose, psi)
        for roles in itertools.product((0, 1, 2), repeat=len(vertices)):
            role_of = dict(zip(vertices, roles))
            inner = frozenset(v for v in vertices if role_of[v] == 2)
            points = [
                token for token in slots
                if isinstance(token, Crossing) or role_of[token] == 1
            ]
            for matching in noncrossing_matchings(points):
                found.add(NooseType(noose, matching, inner))
    return frozenset(found)

