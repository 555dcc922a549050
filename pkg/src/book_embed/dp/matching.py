"""
饱和匹配

判断二部图是否存在同时饱和 A 与 V ⊆ B 的匹配, 归约为单位容量最大流:
源点到 A 的每个点、A 到 B 的每条边、V 到汇点、B∖V 经中转点 t' 到汇点,
t' 到汇点的容量为 |A|-|V|。
"""

from typing import Dict, Hashable, Iterable, Mapping, Optional, Set

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

_SOURCE = ("flow", "source")
_SINK = ("flow", "sink")
_RELAY = ("flow", "relay")


def saturating_matching(
    left: Iterable[Hashable],
    adjacency: Mapping[Hashable, Iterable[Hashable]],
    must_saturate: Iterable[Hashable] = (),
) -> Optional[Dict[Hashable, Hashable]]:
    """
    求饱和 A ∪ V 的匹配

    Args:
        left: A 侧的点
        adjacency: A 侧点 -> 相邻的 B 侧点
        must_saturate: 必须被饱和的 B 侧点集合 V

    Returns:
        Optional[Dict[Hashable, Hashable]]: A 侧点 -> 匹配到的 B 侧点; 不存在时返回 None
    """
    a_side = list(left)
    required: Set[Hashable] = set(must_saturate)
    if len(required) > len(a_side):
        return None
    if not a_side:
        return {}

    network = nx.DiGraph()
    b_side: Set[Hashable] = set(required)
    for a in a_side:
        network.add_edge(_SOURCE, ("a", a), capacity=1)
        for b in adjacency.get(a, ()):
            network.add_edge(("a", a), ("b", b), capacity=1)
            b_side.add(b)
    for b in b_side:
        if b in required:
            network.add_edge(("b", b), _SINK, capacity=1)
        else:
            network.add_edge(("b", b), _RELAY, capacity=1)
    network.add_edge(_RELAY, _SINK, capacity=len(a_side) - len(required))

    value, flow = nx.maximum_flow(network, _SOURCE, _SINK, flow_func=edmonds_karp)
    if value != len(a_side):
        return None

    matching: Dict[Hashable, Hashable] = {}
    for a in a_side:
        for target, amount in flow[("a", a)].items():
            if amount > 0:
                matching[a] = target[1]
                break
    return matching
