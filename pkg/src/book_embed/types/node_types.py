"""
SPQR节点类型

节点类型是两极 s, t 之间由左右两条侧边围成的套索上的类型。穿越点 l, l' 在左侧边上,
r, r' 在右侧边上, l 与 r 靠近 s。这里提供计数器、好类型与坏类型的判定、L/R 镜像,
以及 P 节点中相邻子节点类型的链式组合。
"""

from typing import Dict, Iterable, Optional, Tuple

from ..common.constants import POLE_S, POLE_T, SIDE_LEFT, SIDE_RIGHT
from ..common.exceptions import ContractViolationError
from ..spherecut.models import Subcurve, WeakNoose
from .combine import relabel_type, try_combine
from .models import Crossing, NooseType, make_pair

SIDE_L = Subcurve(POLE_S, POLE_T, SIDE_LEFT)
SIDE_R = Subcurve(POLE_S, POLE_T, SIDE_RIGHT)
POLE_BOUNDARY = WeakNoose(frozenset({SIDE_L, SIDE_R}))

# 链式组合时相邻两个子节点之间的公共侧边
SIDE_JOINT = Subcurve(POLE_S, POLE_T, "J")

L0, L1 = Crossing(SIDE_L, 0), Crossing(SIDE_L, 1)
R0, R1 = Crossing(SIDE_R, 0), Crossing(SIDE_R, 1)

LABELS: Dict[str, object] = {
    "s": POLE_S,
    "t": POLE_T,
    "l": L0,
    "l'": L1,
    "r": R0,
    "r'": R1,
}
_NAMES = {value: key for key, value in LABELS.items()}


def make_node_type(pairs: Iterable[Tuple[str, str]] = (), inner: Iterable[str] = ()) -> NooseType:
    """
    用记号 s, t, l, l', r, r' 构造节点类型

    Raises:
        ContractViolationError: 记号未知或类型不合法
    """
    try:
        resolved = [(LABELS[a], LABELS[b]) for a, b in pairs]
        inner_set = frozenset(LABELS[v] for v in inner)
    except KeyError as exc:
        raise ContractViolationError(f"未知记号: {exc.args[0]}", "make_node_type") from None
    result = NooseType(POLE_BOUNDARY, frozenset(make_pair(a, b) for a, b in resolved), inner_set)
    result.validate()
    return result


def node_type_label(x: NooseType) -> str:
    """如 'M={l-r, s-t'} S={}' 的可读形式"""
    pairs = sorted(
        "-".join(sorted(_NAMES.get(t, repr(t)) for t in pair))
        for pair in x.matching
    )
    inner = sorted(_NAMES.get(v, repr(v)) for v in x.inner)
    return "M={" + ", ".join(pairs) + "} S={" + ", ".join(inner) + "}"


def full_node_type() -> NooseType:
    """(ψ∅, ∅, {s,t})"""
    return NooseType.full(POLE_BOUNDARY)


def empty_node_type() -> NooseType:
    return NooseType.empty(POLE_BOUNDARY)


def count_left(x: NooseType) -> int:
    """#_L"""
    return x.psi_of(SIDE_L)


def count_right(x: NooseType) -> int:
    """#_R"""
    return x.psi_of(SIDE_R)


def count_pole(x: NooseType, pole: str) -> int:
    """#_s 或 #_t"""
    return x.degree(pole)


def is_dirty(x: NooseType) -> bool:
    return x.degree(POLE_S) + x.degree(POLE_T) > 0


GOOD_TYPES: Tuple[NooseType, ...] = (
    make_node_type(),
    make_node_type([("l", "r")]),
    make_node_type([("l", "r"), ("l'", "r'")]),
)


def good_level(x: NooseType) -> Optional[int]:
    """x-好类型返回 x, 否则返回 None"""
    for level, good in enumerate(GOOD_TYPES):
        if x == good:
            return level
    return None


def is_good(x: NooseType) -> bool:
    return good_level(x) is not None


def is_bad(x: NooseType) -> bool:
    return good_level(x) is None


def is_clean_bad(x: NooseType) -> bool:
    return is_bad(x) and not is_dirty(x)


def mirror_type(x: NooseType) -> NooseType:
    """左右镜像: l↔r, l'↔r'"""
    mirrored, _ = relabel_type(x, {SIDE_L: SIDE_R, SIDE_R: SIDE_L}, {})
    return mirrored


def swap_poles(x: NooseType) -> NooseType:
    """交换 s 与 t, 两条侧边上的穿越点序号随之反向"""
    swapped, _ = relabel_type(x, {}, {POLE_S: POLE_T, POLE_T: POLE_S})
    return swapped


ChainStep = Tuple[NooseType, Dict[Crossing, Crossing], Dict[Crossing, Crossing]]


def chain_combine(left: NooseType, right: NooseType) -> Optional[ChainStep]:
    """
    把 right 放在 left 的右侧: left 的右侧边与 right 的左侧边重合

    Returns:
        Optional[ChainStep]: (组合类型, left 的穿越点映射, right 的穿越点映射);
        不相容时返回 None
    """
    shifted_left, left_map = relabel_type(left, {SIDE_R: SIDE_JOINT}, {})
    shifted_right, right_map = relabel_type(right, {SIDE_L: SIDE_JOINT}, {})
    result = try_combine(shifted_left, shifted_right)
    if result is None:
        return None
    return result, left_map, right_map
