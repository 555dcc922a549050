"""
运行报告

记录一次命令行运行的结论, 各阶段耗时, 求解统计, 核大小以及输出文件路径,
以JSON形式保存 (键排序, 2空格缩进, 耗时保留到微秒)。
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..dp.models import DecisionResult
from ..graph.io import write_text
from ..kernel.models import KernelTrace


@dataclass
class RunReport:
    """
    运行报告

    Attributes:
        command: 子命令名称
        source: 输入文件
        pages: 页数 ℓ
        verdict: yes / no, 未作判定时为 None
        timings: 阶段 -> 秒
        stats: 求解统计 (宽度, 表大小, 节点个数等)
        kernel: 核化前后的大小与上界检查
        artifacts: 输出文件路径
    """
    command: str
    source: Optional[str] = None
    pages: int = 2
    verdict: Optional[str] = None
    timings: Dict[str, float] = field(default_factory=dict)
    stats: Dict[str, Any] = field(default_factory=dict)
    kernel: Dict[str, Any] = field(default_factory=dict)
    artifacts: List[str] = field(default_factory=list)

    def record_decision(self, result: DecisionResult) -> None:
        """写入判定结果与求解统计"""
        self.verdict = result.verdict.value
        stats = result.stats.to_dict()
        self.timings.update(stats.pop("timings"))
        self.stats.update(stats)

    def record_kernel(self, trace: KernelTrace) -> None:
        """写入核大小"""
        self.kernel = {
            "fen": trace.fen,
            "original": {"n": trace.original.n, "m": trace.original.m},
            "kernel": {"n": trace.kernel.n, "m": trace.kernel.m},
            "steps": len(trace.steps),
            "threshold": trace.threshold,
        }
        if trace.pages == 2:
            self.kernel["bounds"] = {
                "vertices": trace.vertex_bound,
                "edges": trace.edge_bound,
                "ok": trace.within_bounds(),
            }

    def add_artifact(self, path: Optional[str]) -> None:
        if path and path not in self.artifacts:
            self.artifacts.append(path)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "command": self.command,
            "source": self.source,
            "pages": self.pages,
            "verdict": self.verdict,
            "timings": {phase: round(seconds, 6) for phase, seconds in sorted(self.timings.items())},
            "stats": self.stats,
            "kernel": self.kernel,
            "artifacts": list(self.artifacts),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def save_report(report: RunReport, path: str) -> None:
    """
    保存运行报告

    Args:
        report: 运行报告
        path: 输出路径

    Raises:
        InputFileError: 无法写入
    """
    write_text(path, report.to_json())
