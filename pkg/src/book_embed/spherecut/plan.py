"""
异或方案

内部节点的父弧套索由两条子弧套索与至多两个无边三角形经不超过三次异或得到。
方案记录操作数与每一步使用的下标, 重放即可复现父套索。
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ..common.exceptions import ContractViolationError
from .models import SphereCutDecomposition, WeakNoose
from .nooses import triangle_partitions, xor_nooses

logger = logging.getLogger(__name__)

# 操作数下标: 0 为左子弧, 1 为右子弧, 2/3 为三角形
LEFT, RIGHT, FIRST_TRIANGLE, SECOND_TRIANGLE = 0, 1, 2, 3

Expr = Union[int, Tuple["Expr", "Expr"]]

_ONE_TRIANGLE: Tuple[Expr, ...] = (
    ((LEFT, 2), RIGHT),
    ((RIGHT, 2), LEFT),
    ((LEFT, RIGHT), 2),
)

_TWO_TRIANGLES: Tuple[Expr, ...] = (
    ((LEFT, 2), (RIGHT, 3)),
    ((LEFT, 3), (RIGHT, 2)),
    (((LEFT, 2), RIGHT), 3),
    (((LEFT, 3), RIGHT), 2),
    (((RIGHT, 2), LEFT), 3),
    (((RIGHT, 3), LEFT), 2),
    (((LEFT, RIGHT), 2), 3),
    (((LEFT, RIGHT), 3), 2),
)


@dataclass(frozen=True)
class XorPlan:
    """
    异或方案

    Attributes:
        operands: 左子弧套索、右子弧套索以及三角形
        steps: 每一步的两个操作下标; 第 k 步的结果下标为 len(operands) + k
    """
    operands: Tuple[WeakNoose, ...]
    steps: Tuple[Tuple[int, int], ...]

    @property
    def triangles(self) -> Tuple[WeakNoose, ...]:
        return self.operands[2:]

    def replay(self) -> List[WeakNoose]:
        """
        依次执行每一步

        Returns:
            List[WeakNoose]: 各步结果

        Raises:
            ContractViolationError: 某一步不是合法套索
        """
        values: List[WeakNoose] = list(self.operands)
        results: List[WeakNoose] = []
        for left, right in self.steps:
            result = xor_nooses(values[left], values[right])
            if result is None:
                raise ContractViolationError(f"第 {len(results) + 1} 步异或不是单一闭曲线", "XorPlan.replay")
            values.append(result)
            results.append(result)
        return results

    @property
    def result(self) -> WeakNoose:
        return self.replay()[-1]


def _compile(expr: Expr, count: int, steps: List[Tuple[int, int]]) -> int:
    """把嵌套表达式展开为步骤序列, 返回结果下标"""
    if isinstance(expr, int):
        return expr
    left = _compile(expr[0], count, steps)
    right = _compile(expr[1], count, steps)
    steps.append((left, right))
    return count + len(steps) - 1


def _try(operands: Sequence[WeakNoose], expr: Expr, target: WeakNoose, bound: Optional[int]) -> Optional[XorPlan]:
    steps: List[Tuple[int, int]] = []
    _compile(expr, len(operands), steps)
    values: List[WeakNoose] = list(operands)
    for left, right in steps:
        result = xor_nooses(values[left], values[right])
        if result is None or (bound is not None and len(result) > bound):
            return None
        values.append(result)
    if values[-1] != target:
        return None
    return XorPlan(tuple(operands), tuple(steps))


def plan_xor(parent: WeakNoose, left: WeakNoose, right: WeakNoose) -> Optional[XorPlan]:
    """
    为一个内部节点寻找异或方案

    优先选择中间结果不超过 1 + max(|O_P|, |O_L|, |O_R|) 条子曲线的方案。

    Args:
        parent: 父弧套索
        left: 左子弧套索
        right: 右子弧套索

    Returns:
        Optional[XorPlan]: 找不到时返回 None
    """
    residue = parent.subcurves ^ left.subcurves ^ right.subcurves
    partitions = triangle_partitions(residue)
    bound = 1 + max(len(parent), len(left), len(right))

    for limit in (bound, None):
        for triangles in partitions:
            operands = (left, right) + tuple(triangles)
            if not triangles:
                candidates: Tuple[Expr, ...] = ((LEFT, RIGHT),)
            elif len(triangles) == 1:
                candidates = _ONE_TRIANGLE
            else:
                candidates = _TWO_TRIANGLES
            for expr in candidates:
                plan = _try(operands, expr, parent, limit)
                if plan is not None:
                    return plan
        if partitions:
            logger.debug("异或方案放宽大小上限: |O_P|=%d", len(parent))
    return None


def xor_plan(decomposition: SphereCutDecomposition, parent: int, left: int, right: int) -> XorPlan:
    """
    返回分解中一个内部节点的异或方案

    Args:
        decomposition: 球面切分分解
        parent: 父弧
        left: 左子弧
        right: 右子弧

    Returns:
        XorPlan: 重放后得到父弧套索的方案

    Raises:
        ContractViolationError: 三条弧不构成父子关系或无可行方案
    """
    arc = decomposition.arc(parent)
    if arc.children != (left, right):
        raise ContractViolationError(f"弧 {left}, {right} 不是弧 {parent} 的子弧", "xor_plan")
    cached = decomposition.plans.get(parent)
    if cached is not None:
        return cached
    plan = plan_xor(arc.noose, decomposition.arc(left).noose, decomposition.arc(right).noose)
    if plan is None:
        raise ContractViolationError(f"弧 {parent} 没有可行的异或方案", "xor_plan")
    decomposition.plans[parent] = plan
    return plan
