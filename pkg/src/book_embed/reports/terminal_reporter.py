"""
终端报告

用 rich 表格在标准错误流上展示结论, 阶段耗时, 分解宽度, 类型表大小与核大小。
"""

from typing import Optional

from rich import box
from rich.console import Console
from rich.table import Table

from .run_report import RunReport

_VERDICT_STYLE = {"yes": "bold green", "no": "bold red"}


class TerminalReporter:
    """
    终端报告生成器

    Args:
        console: 输出控制台, 默认写到标准错误
    """

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console(stderr=True)

    def build(self, report: RunReport) -> Table:
        """由运行报告构造表格"""
        table = Table(title=f"book-embed {report.command}", box=box.SIMPLE_HEAVY, show_header=True)
        table.add_column("项目", style="cyan", no_wrap=True)
        table.add_column("值", justify="right")

        if report.source:
            table.add_row("输入", report.source)
        table.add_row("页数", str(report.pages))
        if report.verdict is not None:
            style = _VERDICT_STYLE.get(report.verdict, "")
            table.add_row("结论", f"[{style}]{report.verdict}[/]" if style else report.verdict)

        for phase, seconds in sorted(report.timings.items()):
            table.add_row(f"耗时/{phase}", f"{seconds * 1000:.2f} ms")
        for key in ("blocks", "max_width", "largest_table", "p_sequences"):
            if key in report.stats:
                table.add_row(key, str(report.stats[key]))
        for kind, count in sorted(report.stats.get("spqr_nodes", {}).items()):
            table.add_row(f"{kind} 节点", str(count))

        if report.kernel:
            original, kernel = report.kernel["original"], report.kernel["kernel"]
            table.add_row("fen", str(report.kernel["fen"]))
            table.add_row("输入大小", f"n={original['n']} m={original['m']}")
            table.add_row("核大小", f"n={kernel['n']} m={kernel['m']}")
            bounds = report.kernel.get("bounds")
            if bounds:
                mark = "✅" if bounds["ok"] else "❌"
                table.add_row("上界", f"{mark} n<={bounds['vertices']} m<={bounds['edges']}")
            if report.kernel.get("threshold") is not None:
                table.add_row("路径阈值", str(report.kernel["threshold"]))

        for path in report.artifacts:
            table.add_row("输出", path)
        return table

    def render(self, report: RunReport) -> None:
        """打印报告"""
        self.console.print(self.build(report))
