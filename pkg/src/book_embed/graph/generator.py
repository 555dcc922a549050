"""
实例生成器

生成测试与基准实例: 环, θ 图, 最大度不超过4的连通平面图, 以及随机树加 k 条
非树边 (反馈边数恰为 k)。结果只由 (种类, n, 种子, k) 决定。
"""

import logging
import random
from typing import Dict, FrozenSet, List, Set, Tuple, Union

import networkx as nx

from ..common.constants import InstanceKind
from ..common.exceptions import GenerationError
from .models import MultiGraph

logger = logging.getLogger(__name__)

# 平面实例在删边卡住时换种子重试的次数
_PLANAR_ATTEMPTS = 20
_MAX_DEGREE = 4


def cycle_graph(n: int) -> MultiGraph:
    if n < 3:
        raise GenerationError(f"环至少需要3个顶点, 实际为 {n}", InstanceKind.CYCLE.value)
    return MultiGraph.from_pairs([(i, (i + 1) % n) for i in range(n)], range(n))


def theta_graph(n: int, rng: random.Random) -> MultiGraph:
    """两极 0, 1 之间三条内部不交的路径, 至多一条路径没有内部顶点"""
    if n < 4:
        raise GenerationError(f"θ 图至少需要4个顶点, 实际为 {n}", InstanceKind.THETA.value)
    inner = n - 2
    while True:
        cuts = sorted(rng.randint(0, inner) for _ in range(2))
        sizes = [cuts[0], cuts[1] - cuts[0], inner - cuts[1]]
        if sizes.count(0) <= 1:
            break

    pairs: List[Tuple[int, int]] = []
    next_id = 2
    for size in sizes:
        path = [0] + list(range(next_id, next_id + size)) + [1]
        next_id += size
        pairs.extend(zip(path, path[1:]))
    return MultiGraph.from_pairs(pairs, range(n))


def random_fen_graph(n: int, fen: int, rng: random.Random) -> MultiGraph:
    """随机递归树加 fen 条互不平行的非树边"""
    if n < 1:
        raise GenerationError(f"顶点数必须为正, 实际为 {n}", InstanceKind.RANDOM_FEN.value)
    if fen < 0 or fen > n * (n - 1) // 2 - (n - 1):
        raise GenerationError(f"{n} 个顶点的简单图无法有 {fen} 条非树边", InstanceKind.RANDOM_FEN.value)

    pairs = [(rng.randrange(i), i) for i in range(1, n)]
    present: Set[FrozenSet[int]] = {frozenset(p) for p in pairs}
    while len(pairs) < n - 1 + fen:
        u, v = rng.sample(range(n), 2)
        if frozenset((u, v)) not in present:
            present.add(frozenset((u, v)))
            pairs.append((u, v))
    return MultiGraph.from_pairs(pairs, range(n))


def _random_triangulation(n: int, rng: random.Random) -> nx.Graph:
    """向随机三角面插入顶点得到极大平面图, 再做随机边翻转"""
    faces: Dict[int, FrozenSet[int]] = {0: frozenset((0, 1, 2)), 1: frozenset((0, 1, 2))}
    for v in range(3, n):
        chosen = rng.choice(sorted(faces))
        a, b, c = sorted(faces.pop(chosen))
        for triangle in ((a, b, v), (b, c, v), (a, c, v)):
            faces[max(faces, default=-1) + 1] = frozenset(triangle)

    def edge_faces() -> Dict[FrozenSet[int], List[int]]:
        index: Dict[FrozenSet[int], List[int]] = {}
        for face_id, face in sorted(faces.items()):
            a, b, c = sorted(face)
            for pair in ((a, b), (b, c), (a, c)):
                index.setdefault(frozenset(pair), []).append(face_id)
        return index

    for _ in range(2 * n):
        index = edge_faces()
        pair = rng.choice(sorted(index, key=sorted))
        f1, f2 = index[pair]
        (c,) = faces[f1] - pair
        (d,) = faces[f2] - pair
        if c == d or frozenset((c, d)) in index:
            continue
        a, b = sorted(pair)
        faces[f1] = frozenset((a, c, d))
        faces[f2] = frozenset((b, c, d))

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for face in faces.values():
        a, b, c = sorted(face)
        graph.add_edges_from(((a, b), (b, c), (a, c)))
    return graph


def _cap_degree(graph: nx.Graph, rng: random.Random) -> bool:
    """删边直到最大度不超过4且保持连通, 卡住时返回 False"""
    while True:
        heavy = sorted((v for v in graph.nodes if graph.degree(v) > _MAX_DEGREE),
                       key=lambda v: (-graph.degree(v), v))
        if not heavy:
            return True
        v = heavy[0]
        neighbours = sorted(graph.neighbors(v))
        rng.shuffle(neighbours)
        neighbours.sort(key=lambda w: -graph.degree(w))
        for w in neighbours:
            graph.remove_edge(v, w)
            if nx.has_path(graph, v, w):
                break
            graph.add_edge(v, w)
        else:
            return False


def planar_degree4_graph(n: int, seed: int) -> MultiGraph:
    """最大度不超过4的连通平面图"""
    if n < 1:
        raise GenerationError(f"顶点数必须为正, 实际为 {n}", InstanceKind.PLANAR_DEG4.value)
    if n <= 2:
        return MultiGraph.from_pairs([(0, 1)] if n == 2 else [], range(n))

    for attempt in range(_PLANAR_ATTEMPTS):
        rng = random.Random(f"{seed}:{attempt}")
        graph = _random_triangulation(n, rng)
        if _cap_degree(graph, rng):
            break
        logger.debug("种子 %s 第 %d 次删边卡住, 重试", seed, attempt)
    else:
        raise GenerationError(f"{_PLANAR_ATTEMPTS} 次尝试后仍无法把最大度降到4", InstanceKind.PLANAR_DEG4.value)

    planar, _ = nx.check_planarity(graph)
    if not planar or not nx.is_connected(graph) or max(d for _, d in graph.degree) > _MAX_DEGREE:
        raise GenerationError("生成的图未通过平面性, 连通性或度数检查", InstanceKind.PLANAR_DEG4.value)
    return MultiGraph.from_pairs(sorted(graph.edges), range(n))


def generate_instance(
    kind: Union[str, InstanceKind],
    n: int,
    seed: int = 0,
    fen: int = 3,
) -> MultiGraph:
    """
    生成实例

    Args:
        kind: cycle, theta, planar-deg4 或 random-fen
        n: 顶点数
        seed: 随机种子
        fen: random-fen 的非树边数

    Returns:
        MultiGraph: 生成的图

    Raises:
        GenerationError: 未知种类或参数非法
    """
    try:
        kind = InstanceKind(kind)
    except ValueError as e:
        raise GenerationError(f"未知的实例种类: {kind}", str(kind)) from e

    if kind is InstanceKind.CYCLE:
        return cycle_graph(n)
    if kind is InstanceKind.THETA:
        return theta_graph(n, random.Random(seed))
    if kind is InstanceKind.RANDOM_FEN:
        return random_fen_graph(n, fen, random.Random(seed))
    return planar_degree4_graph(n, seed)
