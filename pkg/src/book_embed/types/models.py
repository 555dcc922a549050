"""
套索类型数据模型

类型 (ψ, M, S) 描述哈密顿圈在一个套索内部的样子: ψ 给出每条子曲线上的穿越点,
M 是路径端点 (穿越点与边界顶点) 的不交叉完美匹配, S 是两条圈边都在内部的边界顶点。
穿越点在子曲线上按离较小端点的远近编号。
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from ..common.constants import MAX_CROSSINGS_PER_SUBCURVE
from ..common.exceptions import ContractViolationError
from ..spherecut.models import Subcurve, WeakNoose


@dataclass(frozen=True, order=True)
class Crossing:
    """
    哈密顿圈与子曲线的一个穿越点

    Attributes:
        subcurve: 所在子曲线
        index: 序号, 0 离较小端点最近
    """
    subcurve: Subcurve
    index: int

    def __repr__(self) -> str:
        return f"x({self.subcurve.low},{self.subcurve.high}|{self.subcurve.face})#{self.index}"


# 类型中的记号: 边界顶点或穿越点
Token = Union[Any, Crossing]
Pair = FrozenSet[Token]


def token_key(token: Token) -> Tuple[int, Any]:
    """记号的全序: 顶点在前, 穿越点在后"""
    if isinstance(token, Crossing):
        return (1, (token.subcurve, token.index))
    return (0, token)


def make_pair(a: Token, b: Token) -> Pair:
    return frozenset((a, b))


def pair_tokens(pair: Pair) -> Tuple[Token, Token]:
    """按记号顺序返回一对端点"""
    a, b = sorted(pair, key=token_key)
    return a, b


def slot_order(noose: WeakNoose, psi: Dict[Subcurve, int]) -> Tuple[Token, ...]:
    """
    套索上的循环槽位顺序: 沿规范遍历依次列出顶点和子曲线上的穿越点

    Args:
        noose: 套索
        psi: 子曲线 -> 穿越点个数

    Returns:
        Tuple[Token, ...]: 槽位序列
    """
    return _slot_order(noose, frozenset((c, n) for c, n in psi.items() if n))


@lru_cache(maxsize=65536)
def _slot_order(noose: WeakNoose, counts: FrozenSet[Tuple[Subcurve, int]]) -> Tuple[Token, ...]:
    psi = dict(counts)
    slots: List[Token] = []
    for vertex, curve in noose.walk:
        slots.append(vertex)
        count = psi.get(curve, 0)
        indices = range(count) if vertex == curve.low else range(count - 1, -1, -1)
        slots.extend(Crossing(curve, i) for i in indices)
    return tuple(slots)


@lru_cache(maxsize=65536)
def _positions(order: Tuple[Token, ...]) -> Dict[Token, int]:
    return {token: i for i, token in enumerate(order)}


def crossing_free(matching: Iterable[Pair], order: Tuple[Token, ...]) -> bool:
    """匹配在给定循环顺序下是否不交叉"""
    position = _positions(order)
    partner: Dict[int, int] = {}
    for pair in matching:
        a, b = tuple(pair)
        if a not in position or b not in position:
            return False
        partner[position[a]] = position[b]
        partner[position[b]] = position[a]
    stack: List[int] = []
    for i in sorted(partner):
        if partner[i] > i:
            stack.append(i)
        elif not stack or stack.pop() != partner[i]:
            return False
    return True


@dataclass(frozen=True)
class NooseType:
    """
    套索类型 (ψ, M, S)

    Attributes:
        noose: 所在套索
        matching: 路径端点的匹配 M
        inner: 边界上的路径内部顶点 S
    """
    noose: WeakNoose
    matching: FrozenSet[Pair]
    inner: FrozenSet[Any]

    @classmethod
    def empty(cls, noose: WeakNoose) -> "NooseType":
        """空类型: M = S = ∅"""
        return cls(noose, frozenset(), frozenset())

    @classmethod
    def full(cls, noose: WeakNoose) -> "NooseType":
        """满类型: M = ∅ 且 S = m(O)"""
        return cls(noose, frozenset(), noose.vertices)

    @cached_property
    def terminals(self) -> FrozenSet[Token]:
        """V(M)"""
        return frozenset(token for pair in self.matching for token in pair)

    @cached_property
    def crossings(self) -> FrozenSet[Crossing]:
        """V(ψ)"""
        return frozenset(t for t in self.terminals if isinstance(t, Crossing))

    @cached_property
    def psi(self) -> Dict[Subcurve, int]:
        """子曲线 -> 穿越点个数 (只含非零项)"""
        counts: Dict[Subcurve, int] = {}
        for crossing in self.crossings:
            counts[crossing.subcurve] = counts.get(crossing.subcurve, 0) + 1
        return counts

    def psi_of(self, curve: Subcurve) -> int:
        return self.psi.get(curve, 0)

    def degree(self, vertex: Any) -> int:
        """边界顶点在内部的圈边数: S 中为2, 路径端点为1, 否则为0"""
        if vertex in self.inner:
            return 2
        return 1 if vertex in self.terminals else 0

    @property
    def is_full(self) -> bool:
        return not self.matching and self.inner == self.noose.vertices

    @property
    def is_empty(self) -> bool:
        return not self.matching and not self.inner

    @cached_property
    def order(self) -> Tuple[Token, ...]:
        """循环槽位顺序 π°(ψ)"""
        return slot_order(self.noose, self.psi)

    @cached_property
    def encoding(self) -> str:
        """
        规范编码: 从最小边界顶点出发的槽位角色串

        '.' 未使用, 'o' 内部顶点, '[' 与 ']' 为匹配的开闭端; 子曲线之间用 '|' 分隔。
        """
        partner: Dict[Token, Token] = {}
        for pair in self.matching:
            a, b = tuple(pair)
            partner[a], partner[b] = b, a
        seen = set()
        chars: List[str] = []
        for token in self.order:
            if not isinstance(token, Crossing):
                chars.append("|")
                if token in self.inner:
                    chars.append("o")
                    continue
                if token not in partner:
                    chars.append(".")
                    continue
            chars.append("]" if partner[token] in seen else "[")
            seen.add(token)
        return "".join(chars)

    def problems(self) -> List[str]:
        """结构检查, 返回全部问题描述"""
        found: List[str] = []
        vertices = self.noose.vertices
        for pair in self.matching:
            if len(pair) != 2:
                found.append(f"匹配对 {set(pair)} 不是两个记号")
        if sum(len(pair) for pair in self.matching) != len(self.terminals):
            found.append("匹配中的记号重复")
        for token in self.terminals:
            if isinstance(token, Crossing):
                if token.subcurve not in self.noose.subcurves:
                    found.append(f"穿越点 {token} 不在套索上")
            elif token not in vertices:
                found.append(f"顶点 {token} 不在套索边界上")
        for curve, count in self.psi.items():
            if count > MAX_CROSSINGS_PER_SUBCURVE:
                found.append(f"子曲线 {curve} 上有 {count} 个穿越点")
            indices = sorted(c.index for c in self.crossings if c.subcurve == curve)
            if indices != list(range(count)):
                found.append(f"子曲线 {curve} 上的穿越点编号不连续")
        if not self.inner <= vertices:
            found.append("S 不是边界顶点的子集")
        if self.inner & self.terminals:
            found.append("S 与 V(M) 相交")
        if not found and not crossing_free(self.matching, self.order):
            found.append("匹配交叉")
        return found

    def validate(self) -> None:
        """
        Raises:
            ContractViolationError: 类型结构不合法
        """
        found = self.problems()
        if found:
            raise ContractViolationError("; ".join(found), "NooseType")

    def sort_key(self) -> Tuple[int, str]:
        return (len(self.noose), self.encoding)

    def __repr__(self) -> str:
        return f"NooseType({self.encoding})"


def make_type(
    noose: WeakNoose,
    pairs: Iterable[Tuple[Token, Token]],
    inner: Iterable[Any] = (),
) -> NooseType:
    """
    由端点对与内部顶点构造类型并检查结构

    Raises:
        ContractViolationError: 结构不合法
    """
    result = NooseType(noose, frozenset(make_pair(a, b) for a, b in pairs), frozenset(inner))
    result.validate()
    return result


def find_crossing(crossings: Iterable[Crossing], curve: Subcurve, index: int) -> Optional[Crossing]:
    for crossing in crossings:
        if crossing.subcurve == curve and crossing.index == index:
            return crossing
    return None
