"""
SPQR树数据模型

每个节点保存骨架多重图、指向父节点的参考边以及虚边到子节点的映射。
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

from ..common.constants import NodeKind
from ..common.exceptions import DecompositionError, UnknownElementError
from ..graph.models import MultiGraph


@dataclass
class SpqrNode:
    """
    SPQR树节点

    Attributes:
        id: 节点编号
        kind: 节点种类
        skeleton: 骨架 (顶点为原图顶点, 边编号在整棵树内唯一)
        reference: 参考边在骨架中的编号
        parent: 父节点编号, 根为 None
        children: 骨架边编号 -> 子节点编号
        real_edge: Q节点对应的原图边
    """
    id: int
    kind: NodeKind
    skeleton: MultiGraph
    reference: int
    parent: Optional[int] = None
    children: Dict[int, int] = field(default_factory=dict)
    real_edge: Optional[int] = None

    @property
    def poles(self) -> Tuple[int, int]:
        """两极 (s, t), 按顶点编号排序"""
        return self.skeleton.edge(self.reference).ends

    def child_edges(self) -> List[int]:
        """除参考边外的骨架边, 按编号排序"""
        return sorted(self.children)

    def to_dict(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "poles": list(self.poles),
            "parent": self.parent,
            "children": {str(e): c for e, c in sorted(self.children.items())},
            "real_edge": self.real_edge,
        }


@dataclass
class SpqrTree:
    """
    以某条实边的Q节点为根的SPQR树

    Attributes:
        graph: 原图 (二连通块)
        nodes: 节点编号 -> 节点
        root: 根Q节点编号
    """
    graph: MultiGraph
    nodes: Dict[int, SpqrNode]
    root: int

    def node(self, node_id: int) -> SpqrNode:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownElementError("SPQR节点", node_id, "SpqrTree.node") from None

    @property
    def root_child(self) -> int:
        """根的唯一子节点 b_r"""
        return next(iter(self.node(self.root).children.values()))

    def postorder(self, start: Optional[int] = None) -> Iterator[int]:
        """后序遍历 (不含根Q节点, 除非显式指定起点)"""
        origin = self.root_child if start is None else start
        stack: List[Tuple[int, bool]] = [(origin, False)]
        while stack:
            node_id, expanded = stack.pop()
            if expanded:
                yield node_id
                continue
            stack.append((node_id, True))
            for edge_id in sorted(self.node(node_id).children, reverse=True):
                stack.append((self.node(node_id).children[edge_id], False))

    def heights(self) -> Dict[int, int]:
        """节点高度, 叶子为0"""
        height: Dict[int, int] = {}
        for node_id in self.postorder():
            kids = self.node(node_id).children.values()
            height[node_id] = 1 + max((height[c] for c in kids), default=-1)
        return height

    def real_edges_below(self, node_id: int) -> Set[int]:
        """子树中全部Q节点的实边"""
        node = self.node(node_id)
        if node.id == self.root:
            return set(self.graph.edge_ids)
        found: Set[int] = set()
        for descendant in self.postorder(node_id):
            real = self.node(descendant).real_edge
            if real is not None:
                found.add(real)
        return found

    def pertinent_graph(self, node_id: int) -> MultiGraph:
        """
        节点的相关图: 去掉参考边后展开全部虚边

        Raises:
            UnknownElementError: 节点不存在
        """
        self.node(node_id)
        return self.graph.edge_subgraph(sorted(self.real_edges_below(node_id)))

    def count(self, kind: NodeKind) -> int:
        return sum(1 for node in self.nodes.values() if node.kind is kind)

    def validate(self) -> None:
        """
        重新检查节点种类约束、相邻约束与重建恒等式

        Raises:
            DecompositionError: 任一约束不成立
        """
        for node in self.nodes.values():
            _check_kind(node)
            if node.parent is not None:
                parent = self.node(node.parent)
                if node.kind is parent.kind and node.kind in (NodeKind.S, NodeKind.P):
                    raise DecompositionError(f"相邻的 {node.kind.value} 节点 {parent.id}, {node.id}", "spqr")
        real = [node.real_edge for node in self.nodes.values() if node.real_edge is not None]
        if len(real) != len(set(real)) or set(real) != set(self.graph.edge_ids):
            raise DecompositionError("展开虚边后无法重建原图", "spqr")
        for node in self.nodes.values():
            for edge_id, child in node.children.items():
                if self.node(child).parent != node.id or self.node(child).reference != edge_id:
                    raise DecompositionError(f"节点 {node.id} 与子节点 {child} 的虚边不一致", "spqr")

    def to_text(self) -> str:
        """缩进文本形式的结构转储"""
        lines: List[str] = []

        def visit(node_id: int, depth: int) -> None:
            node = self.node(node_id)
            s, t = node.poles
            extra = f" e{node.real_edge}" if node.real_edge is not None else ""
            lines.append(f"{'  ' * depth}{node.kind.value}{node.id} ({s},{t}){extra}")
            for edge_id in node.child_edges():
                visit(node.children[edge_id], depth + 1)

        visit(self.root, 0)
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        """DOT 形式的结构转储"""
        lines = ["graph spqr {"]
        for node_id in sorted(self.nodes):
            node = self.node(node_id)
            lines.append(f'  n{node_id} [label="{node.kind.value}{node_id} {node.poles}"];')
        for node_id in sorted(self.nodes):
            for child in sorted(self.node(node_id).children.values()):
                lines.append(f"  n{node_id} -- n{child};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_kind(node: SpqrNode) -> None:
    skeleton = node.skeleton
    pairs = {edge.ends for edge in skeleton.edges}
    if node.kind is NodeKind.Q:
        ok = skeleton.m == 2 and len(pairs) == 1
    elif node.kind is NodeKind.P:
        ok = skeleton.m >= 2 and len(pairs) == 1
    elif node.kind is NodeKind.S:
        ok = skeleton.n >= 3 and skeleton.m == skeleton.n and all(skeleton.degree(v) == 2 for v in skeleton.vertices)
    else:
        ok = len(pairs) == skeleton.m and skeleton.n >= 4 and all(skeleton.degree(v) >= 3 for v in skeleton.vertices)
    if not ok:
        raise DecompositionError(f"节点 {node.id} 的骨架不符合 {node.kind.value} 节点的形状", "spqr")
