"""
不交叉匹配与括号串

给定起点与方向, 圆周上点的不交叉完美匹配与平衡括号串一一对应:
每对匹配中先遇到的一端记为 '[', 后遇到的一端记为 ']'。
"""

from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ..common.exceptions import ContractViolationError
from .models import Pair, Token, make_pair

OPEN = "["
CLOSE = "]"


def rotate(order: Sequence[Token], start: Optional[Token] = None, orientation: str = "cw") -> List[Token]:
    """
    从 start 出发按方向读取循环序列

    Args:
        order: 顺时针循环序列
        start: 起点, 默认为第一个元素
        orientation: 'cw' 或 'ccw'

    Raises:
        ContractViolationError: 起点不在序列中或方向非法
    """
    items = list(order)
    if orientation not in ("cw", "ccw"):
        raise ContractViolationError(f"未知方向: {orientation}", "rotate")
    if not items:
        return items
    index = 0
    if start is not None:
        try:
            index = items.index(start)
        except ValueError:
            raise ContractViolationError(f"起点 {start!r} 不在序列中", "rotate") from None
    items = items[index:] + items[:index]
    if orientation == "ccw":
        items = items[:1] + items[:0:-1]
    return items


def is_dyck_word(word: str) -> bool:
    """每个前缀中 '[' 不少于 ']', 且整体平衡"""
    balance = 0
    for ch in word:
        if ch == OPEN:
            balance += 1
        elif ch == CLOSE:
            balance -= 1
            if balance < 0:
                return False
        else:
            return False
    return balance == 0


def dyck_encode(
    matching: FrozenSet[Pair],
    order: Sequence[Token],
    start: Optional[Token] = None,
    orientation: str = "cw",
) -> str:
    """
    把不交叉匹配编码为括号串

    只有被匹配的槽位产生字符。

    Args:
        matching: 匹配
        order: 顺时针循环序列
        start: 起点
        orientation: 读取方向

    Returns:
        str: 平衡括号串

    Raises:
        ContractViolationError: 匹配含有序列之外的点或发生交叉
    """
    partner: Dict[Token, Token] = {}
    for pair in matching:
        a, b = tuple(pair)
        partner[a], partner[b] = b, a

    sequence = rotate(order, start, orientation)
    missing = set(partner) - set(sequence)
    if missing:
        raise ContractViolationError(f"匹配中的点不在序列中: {sorted(map(repr, missing))}", "dyck_encode")

    chars: List[str] = []
    stack: List[Token] = []
    for token in sequence:
        if token not in partner:
            continue
        if stack and stack[-1] == partner[token]:
            stack.pop()
            chars.append(CLOSE)
        elif partner[token] in stack:
            raise ContractViolationError("匹配交叉", "dyck_encode")
        else:
            stack.append(token)
            chars.append(OPEN)
    return "".join(chars)


def dyck_decode(word: str, slots: Sequence[Token]) -> FrozenSet[Pair]:
    """
    把括号串还原为匹配

    Args:
        word: 括号串
        slots: 与括号一一对应的点

    Raises:
        ContractViolationError: 长度不符或括号不平衡
    """
    if len(word) != len(slots):
        raise ContractViolationError(f"括号串长度 {len(word)} 与点数 {len(slots)} 不符", "dyck_decode")
    if not is_dyck_word(word):
        raise ContractViolationError(f"不是平衡括号串: {word}", "dyck_decode")
    stack: List[Token] = []
    pairs: List[Pair] = []
    for ch, token in zip(word, slots):
        if ch == OPEN:
            stack.append(token)
        else:
            pairs.append(make_pair(stack.pop(), token))
    return frozenset(pairs)


def noncrossing_matchings(points: Sequence[Token]) -> Iterator[FrozenSet[Pair]]:
    """
    枚举按给定循环顺序排列的点的全部不交叉完美匹配

    第一个点与奇数偏移处的点配对, 把其余点分成内外两段分别递归。
    """
    items: Tuple[Token, ...] = tuple(points)
    if len(items) % 2:
        return
    yield from _matchings(items)


def _matchings(items: Tuple[Token, ...]) -> Iterator[FrozenSet[Pair]]:
    if not items:
        yield frozenset()
        return
    first = items[0]
    for k in range(1, len(items), 2):
        pair = make_pair(first, items[k])
        for inside in _matchings(items[1:k]):
            for outside in _matchings(items[k + 1:]):
                yield inside | outside | {pair}
