"""
报告模块

运行报告, 书嵌入的SVG渲染与终端表格。
"""

from .run_report import RunReport, save_report
from .svg_renderer import page_style, render_svg
from .terminal_reporter import TerminalReporter

__all__ = [
    "RunReport",
    "save_report",
    "page_style",
    "render_svg",
    "TerminalReporter",
]
