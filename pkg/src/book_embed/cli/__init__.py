"""
CLI接口模块

提供命令行交互界面，是用户与应用程序交互的主要入口。
"""

from .commands import decide, decide_pages, embed, gen, kernelize, oracle, render, verify
from .main import cli, main

__all__ = [
    "main",
    "cli",
    "decide",
    "decide_pages",
    "embed",
    "gen",
    "kernelize",
    "oracle",
    "render",
    "verify",
]
