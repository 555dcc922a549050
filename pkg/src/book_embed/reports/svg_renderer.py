"""
书嵌入的SVG渲染

书脊为水平线, 顶点按书脊顺序等距排列。第1页的边画成书脊上方的半圆弧, 第2页画在下方;
更多的页交替画在上下两侧, 每页使用不同的颜色, 第3页起另加虚线。
相同输入产生逐字节相同的输出。
"""

import xml.etree.ElementTree as ET
from typing import Dict, Mapping, Optional

from ..common.constants import SVG_MARGIN, SVG_PAGE_COLORS, SVG_VERTEX_RADIUS, SVG_VERTEX_SPACING
from ..common.exceptions import RenderError
from ..graph.models import BookEmbedding, MultiGraph
from ..oracle.verify import embedding_problems, span

SVG_NAMESPACE = "http://www.w3.org/2000/svg"


def _num(value: float) -> str:
    """坐标格式化, 整数不带小数点"""
    return str(int(value)) if float(value).is_integer() else f"{value:.1f}"


def page_style(page: int) -> Dict[str, str]:
    """页的描边样式"""
    style = {
        "stroke": SVG_PAGE_COLORS[(page - 1) % len(SVG_PAGE_COLORS)],
        "stroke-width": "2",
        "fill": "none",
    }
    if page >= 3:
        style["stroke-dasharray"] = f"{2 * (page - 2) + 2} 3"
    return style


def render_svg(
    graph: MultiGraph,
    embedding: BookEmbedding,
    labels: Optional[Mapping[int, str]] = None,
) -> str:
    """
    把书嵌入渲染为SVG文档

    Args:
        graph: 多重图
        embedding: 书嵌入 (页数不限)
        labels: 顶点标签, 默认为顶点编号

    Returns:
        str: SVG文档

    Raises:
        RenderError: 书嵌入不合法
    """
    problems = embedding_problems(graph, embedding, None)
    if problems:
        raise RenderError(problems[0], "SVG", "请先用 verify 命令检查嵌入文件")

    position = embedding.position()
    x = {v: SVG_MARGIN + i * SVG_VERTEX_SPACING for v, i in position.items()}
    radii = {edge.id: (span(edge, position)[1] - span(edge, position)[0]) * SVG_VERTEX_SPACING / 2
             for edge in graph.edges}
    above = max((r for e, r in radii.items() if embedding.pages[e] % 2 == 1), default=0)
    below = max((r for e, r in radii.items() if embedding.pages[e] % 2 == 0), default=0)

    width = 2 * SVG_MARGIN + max(len(embedding.order) - 1, 0) * SVG_VERTEX_SPACING
    spine_y = SVG_MARGIN + above
    height = spine_y + below + SVG_MARGIN

    root = ET.Element("svg", {
        "xmlns": SVG_NAMESPACE,
        "width": _num(width),
        "height": _num(height),
        "viewBox": f"0 0 {_num(width)} {_num(height)}",
    })
    ET.SubElement(root, "line", {
        "x1": _num(SVG_MARGIN / 2),
        "y1": _num(spine_y),
        "x2": _num(width - SVG_MARGIN / 2),
        "y2": _num(spine_y),
        "stroke": "#444",
        "stroke-width": "1",
    })

    for page in sorted(set(embedding.pages.values())):
        group = ET.SubElement(root, "g", {"class": f"page-{page}", **page_style(page)})
        # 奇数页在上方 (顺时针), 偶数页在下方
        sweep = "1" if page % 2 == 1 else "0"
        for edge in sorted(graph.edges, key=lambda e: e.id):
            if embedding.pages[edge.id] != page:
                continue
            left, right = sorted((x[edge.u], x[edge.v]))
            r = radii[edge.id]
            ET.SubElement(group, "path", {
                "id": f"e{edge.id}",
                "d": f"M {_num(left)} {_num(spine_y)} A {_num(r)} {_num(r)} 0 0 {sweep} {_num(right)} {_num(spine_y)}",
            })

    vertices = ET.SubElement(root, "g", {"class": "vertices", "font-family": "monospace", "font-size": "12"})
    for v in embedding.order:
        ET.SubElement(vertices, "circle", {
            "cx": _num(x[v]),
            "cy": _num(spine_y),
            "r": _num(SVG_VERTEX_RADIUS),
            "fill": "#000",
        })
        text = ET.SubElement(vertices, "text", {
            "x": _num(x[v]),
            "y": _num(spine_y - SVG_VERTEX_RADIUS - 4),
            "text-anchor": "middle",
        })
        text.text = labels.get(v, str(v)) if labels else str(v)

    return ET.tostring(root, encoding="unicode") + "\n"
