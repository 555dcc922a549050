"""
报告测试

测试SVG渲染, 运行报告的JSON输出与终端表格。
"""

import io
import json
import xml.etree.ElementTree as ET

import pytest
from rich.console import Console

from book_embed.common.exceptions import RenderError
from book_embed.dp import decide_subham
from book_embed.graph.models import BookEmbedding
from book_embed.kernel import kernelize_multi_page, kernelize_two_page
from book_embed.reports import RunReport, TerminalReporter, page_style, render_svg, save_report

from .graph_samples import complete, cycle, figure1, figure1_embedding

NS = "{http://www.w3.org/2000/svg}"


def _k4_embedding() -> BookEmbedding:
    graph = complete(4)
    return BookEmbedding((0, 1, 2, 3), {e.id: 2 if e.ends == (1, 3) else 1 for e in graph.edges})


class TestSvgRenderer:
    """测试SVG渲染"""

    def test_structure(self):
        """测试书脊, 页分组, 边与顶点"""
        graph = complete(4)
        root = ET.fromstring(render_svg(graph, _k4_embedding()))

        assert root.tag == f"{NS}svg"
        assert len(root.findall(f"{NS}line")) == 1
        groups = {g.get("class"): g for g in root.findall(f"{NS}g")}
        assert set(groups) == {"page-1", "page-2", "vertices"}
        assert [p.get("id") for p in groups["page-2"].findall(f"{NS}path")] == ["e4"]
        assert len(root.findall(f".//{NS}path")) == graph.m
        assert len(root.findall(f".//{NS}circle")) == graph.n

    def test_labels(self):
        """测试自定义顶点标签"""
        root = ET.fromstring(render_svg(complete(4), _k4_embedding(), labels={0: "a", 3: "d"}))

        texts = [t.text for t in root.iter(f"{NS}text")]
        assert texts == ["a", "1", "2", "d"]

    def test_deterministic(self):
        """测试相同输入输出相同"""
        graph, embedding = figure1(), figure1_embedding()

        assert render_svg(graph, embedding) == render_svg(graph, embedding)

    def test_figure1(self):
        """测试夹具嵌入的渲染"""
        graph = figure1()
        root = ET.fromstring(render_svg(graph, figure1_embedding()))

        assert len(root.findall(f".//{NS}path")) == 31
        assert len(root.findall(f".//{NS}circle")) == 19

    def test_invalid_embedding(self):
        """测试不合法的嵌入"""
        graph = complete(4)

        with pytest.raises(RenderError):
            render_svg(graph, BookEmbedding((0, 1, 2), {e: 1 for e in graph.edge_ids}))
        with pytest.raises(RenderError):
            render_svg(graph, BookEmbedding((0, 1, 2, 3), {e: 1 for e in graph.edge_ids}))

    def test_many_pages(self):
        """测试第3页起使用虚线"""
        graph = cycle(4)
        embedding = BookEmbedding((0, 1, 2, 3), {0: 1, 1: 2, 2: 3, 3: 4})
        root = ET.fromstring(render_svg(graph, embedding))

        classes = [g.get("class") for g in root.findall(f"{NS}g")]
        assert classes == ["page-1", "page-2", "page-3", "page-4", "vertices"]
        assert "stroke-dasharray" not in page_style(2)
        assert page_style(3)["stroke-dasharray"] == "4 3"
        assert page_style(1)["stroke"] != page_style(2)["stroke"]


class TestRunReport:
    """测试运行报告"""

    def test_decision(self):
        """测试写入判定结果"""
        report = RunReport("decide", source="k4.edges")
        report.record_decision(decide_subham(complete(4)))
        data = report.to_dict()

        assert data["verdict"] == "yes"
        assert data["stats"]["blocks"] == 1
        assert "dp" in data["timings"]
        assert "timings" not in data["stats"]

    def test_two_page_kernel(self):
        """测试2页核带上界检查"""
        report = RunReport("kernelize")
        report.record_kernel(kernelize_two_page(cycle(20))[1])

        assert report.kernel["kernel"] == {"n": 4, "m": 4}
        assert report.kernel["bounds"] == {"vertices": 4, "edges": 5, "ok": True}

    def test_multi_page_kernel(self):
        """测试多页核不带上界检查"""
        report = RunReport("kernelize", pages=3)
        report.record_kernel(kernelize_multi_page(cycle(20), 3)[1])

        assert "bounds" not in report.kernel
        assert report.kernel["threshold"] == 6

    def test_artifacts(self):
        """测试输出路径去重"""
        report = RunReport("embed")
        report.add_artifact("out.svg")
        report.add_artifact("out.svg")
        report.add_artifact(None)

        assert report.artifacts == ["out.svg"]

    def test_json(self, tmp_path):
        """测试JSON格式与保存"""
        report = RunReport("decide", timings={"dp": 0.12345678, "parse": 0.5})
        text = report.to_json()

        assert text.endswith("\n")
        assert json.loads(text)["timings"] == {"dp": 0.123457, "parse": 0.5}
        target = tmp_path / "report.json"
        save_report(report, str(target))
        assert target.read_text(encoding="utf-8") == text


class TestTerminalReporter:
    """测试终端表格"""

    def test_build(self):
        """测试表格行"""
        report = RunReport("decide", source="k4.edges", verdict="yes", timings={"dp": 0.002})
        report.record_kernel(kernelize_two_page(cycle(8))[1])
        table = TerminalReporter().build(report)

        assert table.row_count == 8
        assert table.title == "book-embed decide"

    def test_render(self):
        """测试打印到控制台"""
        buffer = io.StringIO()
        reporter = TerminalReporter(Console(file=buffer, width=100, color_system=None))
        reporter.render(RunReport("oracle", verdict="no", artifacts=["out.json"]))

        output = buffer.getvalue()
        assert "no" in output
        assert "out.json" in output
