"""
SPQR树构建

对二连通多重图反复拆分: 先拆出平行边束, 再沿分离对拆分, 直到只剩键、环与三连通分量。
随后合并共享虚边的同类分量 (键与键, 环与环), 最后以参考边的Q节点为根组装成树。
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from ..common.constants import NodeKind
from ..common.exceptions import ContractViolationError, DecompositionError
from ..graph.models import Edge, MultiGraph
from ..graph.operations import is_connected
from .models import SpqrNode, SpqrTree

logger = logging.getLogger(__name__)


@dataclass
class SplitComponent:
    """
    分离分量

    Attributes:
        kind: 分量种类 (P 为键, S 为环, R 为三连通)
        edges: 分量中的边, 编号不小于原图 next_edge_id 的是虚边
    """
    kind: NodeKind
    edges: List[Edge]

    def edge_ids(self) -> Set[int]:
        return {edge.id for edge in self.edges}


class SpqrBuilder:
    """
    SPQR树构建器

    虚边编号从原图最大边编号之后开始分配, 一条虚边恰好出现在两个分量中。
    """

    def __init__(self, graph: MultiGraph):
        self.graph = graph
        self._base = graph.next_edge_id()
        self._next = self._base

    def _fresh(self) -> int:
        edge_id = self._next
        self._next += 1
        return edge_id

    def is_virtual(self, edge_id: int) -> bool:
        return edge_id >= self._base

    def build(self, reference: int) -> SpqrTree:
        """
        构建以 reference 的Q节点为根的SPQR树

        Args:
            reference: 参考边编号

        Returns:
            SpqrTree: 已校验的树

        Raises:
            ContractViolationError: 输入不是二连通图或边数不足
            DecompositionError: 结果不满足结构约束
        """
        _require_biconnected(self.graph)
        self.graph.edge(reference)

        components = self.merge(self.split())
        logger.debug(
            "SPQR: %d 个分量 (P=%d, S=%d, R=%d)",
            len(components),
            sum(1 for c in components if c.kind is NodeKind.P),
            sum(1 for c in components if c.kind is NodeKind.S),
            sum(1 for c in components if c.kind is NodeKind.R),
        )
        tree = self.assemble(components, reference)
        tree.validate()
        return tree

    # 拆分
    def split(self) -> List[SplitComponent]:
        """把图拆成分离分量 (键、环与三连通图)"""
        work: List[List[Edge]] = [list(self.graph.edges)]
        final: List[SplitComponent] = []
        while work:
            edges = work.pop()
            component = self._split_once(edges, work)
            if component is not None:
                final.append(component)
        return final

    def _split_once(self, edges: List[Edge], work: List[List[Edge]]) -> Optional[SplitComponent]:
        bundles: Dict[Tuple[int, int], List[Edge]] = defaultdict(list)
        for edge in edges:
            bundles[edge.ends].append(edge)
        if len(bundles) == 1:
            return SplitComponent(NodeKind.P, edges)

        for ends in sorted(bundles):
            bundle = bundles[ends]
            if len(bundle) >= 2:
                virtual = Edge(self._fresh(), *ends)
                work.append(bundle + [virtual])
                work.append([e for e in edges if e.ends != ends] + [virtual])
                return None

        component = MultiGraph({x for e in edges for x in (e.u, e.v)}, edges)
        if all(component.degree(v) == 2 for v in component.vertices):
            return SplitComponent(NodeKind.S, edges)

        pair = _separation_pair(component)
        if pair is None:
            if component.n < 4:
                raise DecompositionError(f"{component.n} 个顶点的分量既不是环也不是三连通图", "spqr")
            return SplitComponent(NodeKind.R, edges)

        a, b, first, rest = pair
        virtual = Edge(self._fresh(), a, b)
        work.append(first + [virtual])
        work.append(rest + [virtual])
        return None

    # 合并
    def merge(self, components: List[SplitComponent]) -> List[SplitComponent]:
        """合并共享虚边的键与键、环与环"""
        owners: Dict[int, List[int]] = defaultdict(list)
        for index, component in enumerate(components):
            for edge in component.edges:
                if self.is_virtual(edge.id):
                    owners[edge.id].append(index)

        groups = UnionFind(range(len(components)))
        dropped: Set[int] = set()
        for edge_id in sorted(owners):
            first, second = owners[edge_id]
            kind = components[first].kind
            if kind is components[second].kind and kind in (NodeKind.P, NodeKind.S):
                groups.union(first, second)
                dropped.add(edge_id)

        merged: List[SplitComponent] = []
        for members in sorted(sorted(group) for group in groups.to_sets()):
            edges = [
                edge
                for index in members
                for edge in components[index].edges
                if edge.id not in dropped
            ]
            merged.append(SplitComponent(components[members[0]].kind, sorted(edges, key=lambda e: e.id)))
        return merged

    # 组装
    def assemble(self, components: List[SplitComponent], reference: int) -> SpqrTree:
        """以参考边的Q节点为根, 沿虚边广度优先组装树"""
        owners: Dict[int, List[int]] = defaultdict(list)
        home: Optional[int] = None
        for index, component in enumerate(components):
            for edge in component.edges:
                if self.is_virtual(edge.id):
                    owners[edge.id].append(index)
                elif edge.id == reference:
                    home = index
        if home is None:
            raise DecompositionError(f"参考边 {reference} 不在任何分量中", "spqr")

        ref_edge = self.graph.edge(reference)
        root_virtual = Edge(self._fresh(), *ref_edge.ends)
        nodes: Dict[int, SpqrNode] = {
            0: SpqrNode(
                id=0,
                kind=NodeKind.Q,
                skeleton=MultiGraph(ref_edge.ends, [ref_edge, root_virtual]),
                reference=root_virtual.id,
                real_edge=reference,
            )
        }

        queue: Deque[Tuple[int, int, Edge]] = deque([(home, 0, root_virtual)])
        while queue:
            index, parent, parent_edge = queue.popleft()
            node_id = len(nodes)
            nodes[parent].children[parent_edge.id] = node_id
            skeleton_edges: List[Edge] = []
            leaves: List[Tuple[Edge, Edge]] = []
            pending: List[Tuple[int, Edge]] = []

            for edge in components[index].edges:
                if edge.id == reference:
                    skeleton_edges.append(Edge(parent_edge.id, edge.u, edge.v))
                elif self.is_virtual(edge.id):
                    skeleton_edges.append(edge)
                    if edge.id != parent_edge.id:
                        other = next(i for i in owners[edge.id] if i != index)
                        pending.append((other, edge))
                else:
                    leaf = Edge(self._fresh(), edge.u, edge.v)
                    skeleton_edges.append(leaf)
                    leaves.append((leaf, edge))

            skeleton = MultiGraph({x for e in skeleton_edges for x in (e.u, e.v)}, skeleton_edges)
            nodes[node_id] = SpqrNode(
                id=node_id,
                kind=components[index].kind,
                skeleton=skeleton,
                reference=parent_edge.id,
                parent=parent,
            )
            # Q叶子紧随其父节点编号
            for leaf, real in leaves:
                leaf_id = len(nodes)
                nodes[leaf_id] = SpqrNode(
                    id=leaf_id,
                    kind=NodeKind.Q,
                    skeleton=MultiGraph(leaf.ends, [Edge(real.id, real.u, real.v), leaf]),
                    reference=leaf.id,
                    parent=node_id,
                    real_edge=real.id,
                )
                nodes[node_id].children[leaf.id] = leaf_id
            for other, edge in pending:
                queue.append((other, node_id, edge))

        return SpqrTree(graph=self.graph, nodes=nodes, root=0)


def _require_biconnected(graph: MultiGraph) -> None:
    if graph.m < 2:
        raise ContractViolationError("SPQR树至少需要两条边", "build_spqr")
    if graph.n < 2 or not is_connected(graph):
        raise ContractViolationError("输入图不连通", "build_spqr")
    if graph.n > 2 and any(True for _ in nx.articulation_points(graph.to_simple_networkx())):
        raise ContractViolationError("输入图不是二连通图", "build_spqr")


def _separation_pair(
    component: MultiGraph,
) -> Optional[Tuple[int, int, List[Edge], List[Edge]]]:
    """
    在简单二连通图中寻找分离对 {a, b}

    Returns:
        (a, b, 第一个分离类的边, 其余边) 或 None (三连通)
    """
    simple = component.to_simple_networkx()
    for a in component.vertices:
        rest = simple.copy()
        rest.remove_node(a)
        cuts = sorted(nx.articulation_points(rest))
        if not cuts:
            continue
        b = cuts[0]
        rest.remove_node(b)
        classes = sorted(sorted(part) for part in nx.connected_components(rest))
        first_vertices = set(classes[0])
        first = [e for e in component.edges if e.u in first_vertices or e.v in first_vertices]
        chosen = {e.id for e in first}
        others = [e for e in component.edges if e.id not in chosen]
        return a, b, first, others
    return None


def build_spqr(graph: MultiGraph, reference: int) -> SpqrTree:
    """
    构建以参考边Q节点为根的SPQR树

    Args:
        graph: 二连通多重图 (至少两条边)
        reference: 参考边编号

    Returns:
        SpqrTree: SPQR树
    """
    return SpqrBuilder(graph).build(reference)


def pertinent_graph(tree: SpqrTree, node_id: int) -> MultiGraph:
    """节点的相关图"""
    return tree.pertinent_graph(node_id)
