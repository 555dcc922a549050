"""
图的输入输出

支持边列表与JSON两种格式, 以及书嵌入的JSON格式。
"""

import json
from typing import Any, Dict, List, Optional, Tuple

from ..common.constants import GraphFormat
from ..common.exceptions import (
    ContractViolationError,
    GraphParseError,
    InputFileError,
    SelfLoopError,
    handle_file_error,
)
from .models import BookEmbedding, Edge, MultiGraph


def parse_graph(text: str, source: Optional[str] = None) -> MultiGraph:
    """
    解析图文本, 以 '{' 开头时按JSON处理, 否则按边列表处理

    Args:
        text: 文本内容
        source: 来源名称, 用于错误信息

    Returns:
        MultiGraph: 顶点编号规范化为 0..n-1 的图

    Raises:
        GraphParseError: 格式错误
        SelfLoopError: 出现自环
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text, source)
    return _parse_edge_list(text, source)


def _parse_edge_list(text: str, source: Optional[str]) -> MultiGraph:
    ids: Dict[str, int] = {}
    pairs: List[Tuple[int, int]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(
                f"每行应恰好包含两个顶点, 实际为 {len(tokens)} 个",
                line_number,
                source,
                "格式为 'u v', 可用 '#' 添加注释",
            )
        if tokens[0] == tokens[1]:
            raise SelfLoopError(tokens[0], line_number)
        # 按首次出现顺序编号
        for token in tokens:
            if token not in ids:
                ids[token] = len(ids)
        pairs.append((ids[tokens[0]], ids[tokens[1]]))

    return MultiGraph.from_pairs(pairs, range(len(ids)))


def _parse_json(text: str, source: Optional[str]) -> MultiGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"JSON解析失败: {e.msg}", e.lineno, source) from e

    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphParseError("JSON文档必须包含 'n' 与 'edges'", None, source)

    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise GraphParseError(f"'n' 必须为非负整数, 实际为 {n!r}", None, source)

    pairs: List[Tuple[int, int]] = []
    for index, item in enumerate(data["edges"]):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise GraphParseError(f"第 {index} 条边格式错误: {item!r}", None, source)
        u, v = item
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"第 {index} 条边的端点超出范围 0..{n - 1}", None, source)
        if u == v:
            raise SelfLoopError(u)
        pairs.append((u, v))

    return MultiGraph.from_pairs(pairs, range(n))


def relabel_for_format(
    graph: MultiGraph,
    fmt: GraphFormat = GraphFormat.EDGES,
) -> Tuple[MultiGraph, Tuple[int, ...]]:
    """
    把图重新编号成该格式能原样读回的形式

    边按编号顺序改为 0..m-1。JSON格式下顶点按编号顺序改为 0..n-1; 边列表格式下
    按首次出现顺序编号, 与解析时一致。

    Args:
        graph: 图
        fmt: 目标格式

    Returns:
        Tuple[MultiGraph, Tuple[int, ...]]: 新图, 以及新编号 -> 原顶点

    Raises:
        ContractViolationError: 边列表格式下图含孤立点
    """
    if fmt is GraphFormat.EDGES:
        labels: List[int] = []
        seen = set()
        for edge in graph.edges:
            for v in (edge.u, edge.v):
                if v not in seen:
                    seen.add(v)
                    labels.append(v)
        if len(labels) != graph.n:
            isolated = sorted(set(graph.vertices) - seen)
            raise ContractViolationError(
                f"边列表无法表示孤立点 {isolated}",
                "serialize_graph",
                "改用 --format json",
            )
    else:
        labels = list(graph.vertices)
    index = {v: i for i, v in enumerate(labels)}
    edges = [Edge(i, index[e.u], index[e.v]) for i, e in enumerate(graph.edges)]
    return MultiGraph(range(len(labels)), edges), tuple(labels)


def serialize_graph(graph: MultiGraph, fmt: GraphFormat = GraphFormat.EDGES) -> str:
    """
    序列化图, 保证 parse_graph 读回的图与原图相等

    Args:
        graph: 图
        fmt: 输出格式

    Returns:
        str: 文本内容

    Raises:
        ContractViolationError: 图的编号无法在该格式下原样读回, 先用 relabel_for_format 改写
    """
    canonical, _ = relabel_for_format(graph, fmt)
    if canonical != graph:
        raise ContractViolationError(
            "图的顶点或边编号无法原样读回",
            "serialize_graph",
            "先调用 relabel_for_format 重新编号",
        )
    if fmt is GraphFormat.JSON:
        payload = {"n": graph.n, "edges": [[e.u, e.v] for e in graph.edges]}
        return json.dumps(payload) + "\n"
    return "".join(f"{e.u} {e.v}\n" for e in graph.edges)


def relabel_dense(graph: MultiGraph) -> MultiGraph:
    """把顶点与边重新编号为 0..n-1 与 0..m-1 (保持原有顺序)"""
    return relabel_for_format(graph, GraphFormat.JSON)[0]


def _read_text(path: str) -> str:
    handle_file_error(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputFileError(path, f"无法读取 ({e.strerror})") from e


def read_graph_file(path: str) -> MultiGraph:
    """读取图文件"""
    return parse_graph(_read_text(path), source=path)


def write_text(path: str, content: str) -> None:
    """写出文本文件, IO错误统一映射"""
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
    except OSError as e:
        raise InputFileError(path, f"无法写入 ({e.strerror})") from e


def parse_embedding(text: str, source: Optional[str] = None) -> BookEmbedding:
    """
    解析书嵌入JSON: {"order": [...], "pages": {"<edge-id>": int}}

    Raises:
        GraphParseError: 格式错误
    """
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"JSON解析失败: {e.msg}", e.lineno, source) from e

    if not isinstance(data, dict) or "order" not in data or "pages" not in data:
        raise GraphParseError("嵌入文档必须包含 'order' 与 'pages'", None, source)
    order = data["order"]
    pages = data["pages"]
    if not isinstance(order, list) or not all(isinstance(v, int) for v in order):
        raise GraphParseError("'order' 必须是整数列表", None, source)
    if not isinstance(pages, dict):
        raise GraphParseError("'pages' 必须是映射", None, source)

    parsed: Dict[int, int] = {}
    for key, page in pages.items():
        try:
            edge_id = int(key)
        except ValueError:
            raise GraphParseError(f"非法的边编号 {key!r}", None, source) from None
        if isinstance(page, bool) or not isinstance(page, int):
            raise GraphParseError(f"边 {key} 的页码必须是整数", None, source)
        parsed[edge_id] = page

    return BookEmbedding(tuple(order), parsed)


def read_embedding_file(path: str) -> BookEmbedding:
    """读取书嵌入文件"""
    return parse_embedding(_read_text(path), source=path)


def serialize_embedding(embedding: BookEmbedding) -> str:
    """序列化书嵌入, 键排序保证输出稳定"""
    return json.dumps(embedding.to_dict(), indent=2, sort_keys=True) + "\n"
