"""
CLI命令定义

实现 decide, embed, kernelize, oracle, verify, gen, render 与 version 命令。
判定类命令的退出码: 0 表示存在书嵌入, 1 表示不存在, 2 表示输入或参数错误。
"""

import functools
import json
import sys
from typing import Any, Callable, Dict, Optional

import click

from .. import __version__
from ..common.config import SolverConfig
from ..common.constants import ExitCode, GraphFormat, InstanceKind, Verdict
from ..common.exceptions import BookEmbedException, InternalInconsistencyError
from ..dp.solver import decide_subham
from ..graph.generator import generate_instance
from ..graph.io import (
    read_embedding_file,
    read_graph_file,
    relabel_for_format,
    serialize_embedding,
    serialize_graph,
    write_text,
)
from ..graph.models import BookEmbedding, MultiGraph
from ..kernel.lift import lift_embedding
from ..kernel.multi_page import kernelize_multi_page
from ..kernel.two_page import kernelize_two_page
from ..oracle.brute_force import brute_force_book_embedding, brute_force_subham
from ..oracle.verify import embedding_problems
from ..reports.run_report import RunReport, save_report
from ..reports.svg_renderer import render_svg
from ..reports.terminal_reporter import TerminalReporter
from .options import (
    cap_option,
    format_option,
    graph_argument,
    output_options,
    pages_option,
    parallel_option,
    progress_option,
    svg_option,
)


class CommandError(click.ClickException):
    """把包内异常转换为退出码2的命令行错误"""

    exit_code = int(ExitCode.ERROR)

    def __init__(self, error: BookEmbedException):
        super().__init__(error.message)
        self.error = error

    def show(self, file: Any = None) -> None:
        headline = str(self.error).splitlines()[0]
        click.echo(f"❌ 错误: {headline}", err=True)
        if self.error.suggestion:
            click.echo(f"💡 建议: {self.error.suggestion}", err=True)


def handle_errors(f: Callable) -> Callable:
    """命令内抛出的包内异常统一映射为退出码2; 调试模式下原样抛出"""

    @functools.wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except BookEmbedException as e:
            if ctx.obj and ctx.obj.get("debug"):
                raise
            raise CommandError(e) from e

    return wrapper


def _config(ctx: click.Context, **overrides: Any) -> SolverConfig:
    config: SolverConfig = (ctx.obj or {}).get("config") or SolverConfig()
    return config.with_overrides(**overrides)


def _progress(silent: bool, message: str) -> None:
    if not silent:
        click.echo(message, err=True)


def _finish(report: RunReport, report_path: Optional[str], verbose: bool) -> None:
    """保存运行报告, 并按需打印统计表格"""
    if report_path:
        report.add_artifact(report_path)
        save_report(report, report_path)
    if verbose:
        TerminalReporter().render(report)


def _exit_with(ctx: click.Context, verdict: Verdict) -> None:
    ctx.exit(int(ExitCode.YES if verdict is Verdict.YES else ExitCode.NO))


def _dump_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def decide_pages(graph: MultiGraph, pages: int, config: SolverConfig, report: RunReport) -> Optional[BookEmbedding]:
    """
    判定 ℓ 页书嵌入

    2页使用SPQR树动态规划; ℓ>=3 先做长路径核化再在核上暴力求解并提升; 1页直接暴力求解。

    Returns:
        Optional[BookEmbedding]: 经过校验的书嵌入; 不存在时返回 None
    """
    if pages == 2:
        result = decide_subham(graph, config)
        report.record_decision(result)
        return result.embedding

    if pages == 1:
        found = brute_force_book_embedding(graph, 1, config.multi_page_oracle_cap)
    else:
        kernel, trace = kernelize_multi_page(graph, pages)
        report.record_kernel(trace)
        found = brute_force_book_embedding(kernel, pages, config.multi_page_oracle_cap)
        if found is not None:
            found = lift_embedding(trace, found)
    report.verdict = (Verdict.YES if found is not None else Verdict.NO).value
    return found


@click.command()
@graph_argument
@pages_option
@output_options
@parallel_option
@progress_option
@click.pass_context
@handle_errors
def decide(
    ctx: click.Context,
    graph_file: str,
    pages: int,
    json_path: Optional[str],
    report_path: Optional[str],
    parallel: Optional[bool],
    silent: bool,
    verbose: bool,
) -> None:
    """
    判定图是否存在 ℓ 页书嵌入

    GRAPH: 边列表或JSON格式的图文件

    输出 yes 或 no, 退出码分别为 0 和 1。

    示例:

      \b
      book-embed decide k4.edges
      book-embed decide g.edges --json result.json --report run.json
      book-embed decide g.edges --pages 3
    """
    config = _config(ctx, parallel=parallel)
    graph = read_graph_file(graph_file)
    _progress(silent, f"🚀 {graph_file}: n={graph.n}, m={graph.m}, ℓ={pages}")

    report = RunReport("decide", graph_file, pages)
    embedding = decide_pages(graph, pages, config, report)
    verdict = Verdict.YES if embedding is not None else Verdict.NO

    if json_path:
        payload = {
            "verdict": verdict.value,
            "pages": pages,
            "embedding": embedding.to_dict() if embedding else None,
        }
        write_text(json_path, _dump_json(payload))
        report.add_artifact(json_path)
    _finish(report, report_path, verbose)

    click.echo(verdict.value)
    _exit_with(ctx, verdict)


@click.command()
@graph_argument
@svg_option
@output_options
@parallel_option
@progress_option
@click.pass_context
@handle_errors
def embed(
    ctx: click.Context,
    graph_file: str,
    svg_path: Optional[str],
    json_path: Optional[str],
    report_path: Optional[str],
    parallel: Optional[bool],
    silent: bool,
    verbose: bool,
) -> None:
    """
    计算2页书嵌入

    GRAPH: 边列表或JSON格式的图文件

    存在时把经过校验的嵌入写到 --json 指定的文件 (默认标准输出), 可同时输出SVG。

    示例:

      \b
      book-embed embed g.edges --json emb.json --svg emb.svg
    """
    config = _config(ctx, parallel=parallel)
    graph = read_graph_file(graph_file)
    _progress(silent, f"🚀 {graph_file}: n={graph.n}, m={graph.m}")

    report = RunReport("embed", graph_file, 2)
    result = decide_subham(graph, config)
    report.record_decision(result)

    if result.embedding is None:
        _progress(silent, "❌ 不存在2页书嵌入")
        _finish(report, report_path, verbose)
        click.echo(Verdict.NO.value)
        _exit_with(ctx, Verdict.NO)
        return

    problems = embedding_problems(graph, result.embedding, 2)
    if problems:
        raise InternalInconsistencyError(f"输出前校验失败: {problems[0]}", "embed")

    content = serialize_embedding(result.embedding)
    if json_path:
        write_text(json_path, content)
        report.add_artifact(json_path)
    else:
        click.echo(content, nl=False)
    if svg_path:
        write_text(svg_path, render_svg(graph, result.embedding))
        report.add_artifact(svg_path)
    _progress(silent, "✅ 书嵌入已通过校验")
    _finish(report, report_path, verbose)
    _exit_with(ctx, Verdict.YES)


@click.command()
@graph_argument
@pages_option
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="把核写到指定文件 (默认标准输出)")
@format_option
@click.option(
    "--threshold",
    type=click.IntRange(min=2),
    default=None,
    help="ℓ>=3 时固定路径长度阈值 (不保证判定等价, 仅用于实验)",
)
@output_options
@progress_option
@handle_errors
def kernelize(
    graph_file: str,
    pages: int,
    output: Optional[str],
    fmt: str,
    threshold: Optional[int],
    json_path: Optional[str],
    report_path: Optional[str],
    silent: bool,
    verbose: bool,
) -> None:
    """
    按反馈边数核化

    GRAPH: 边列表或JSON格式的图文件

    ℓ=2 时输出线性核并检查 12k-8 / 14k-9 上界; ℓ>=3 时输出长路径核。

    示例:

      \b
      book-embed kernelize g.edges -o kernel.edges --json trace.json
      book-embed kernelize g.edges --pages 3 --threshold 4
    """
    if pages == 1:
        raise click.UsageError("核化要求 ℓ >= 2")
    if threshold is not None and pages == 2:
        raise click.UsageError("--threshold 只适用于 ℓ >= 3")

    graph = read_graph_file(graph_file)
    if pages == 2:
        kernel, trace = kernelize_two_page(graph)
    else:
        kernel, trace = kernelize_multi_page(graph, pages, threshold)

    report = RunReport("kernelize", graph_file, pages)
    report.record_kernel(trace)
    _progress(silent, f"🔧 n={graph.n}, m={graph.m} → n={kernel.n}, m={kernel.m} (fen={trace.fen})")
    if pages == 2:
        mark = "✅" if trace.within_bounds() else "⚠️"
        _progress(silent, f"{mark} 上界: n <= {trace.vertex_bound}, m <= {trace.edge_bound}")

    # 核保留原图顶点编号, 写出前重新编号, 对应关系记在 --json 的 labels 中
    written, labels = relabel_for_format(kernel, GraphFormat(fmt))
    content = serialize_graph(written, GraphFormat(fmt))
    if output:
        write_text(output, content)
        report.add_artifact(output)
    else:
        click.echo(content, nl=False)
    if json_path:
        payload = trace.to_dict()
        payload["labels"] = list(labels)
        write_text(json_path, _dump_json(payload))
        report.add_artifact(json_path)
    _finish(report, report_path, verbose)


@click.command()
@graph_argument
@pages_option
@cap_option
@parallel_option
@output_options
@progress_option
@click.pass_context
@handle_errors
def oracle(
    ctx: click.Context,
    graph_file: str,
    pages: int,
    cap: Optional[int],
    parallel: Optional[bool],
    json_path: Optional[str],
    report_path: Optional[str],
    silent: bool,
    verbose: bool,
) -> None:
    """
    暴力求解 ℓ 页书嵌入

    GRAPH: 边列表或JSON格式的图文件

    只适用于小图, 顶点数超过 --cap 时拒绝求解。

    示例:

      \b
      book-embed oracle k4.edges
      book-embed oracle g.edges --pages 3 --cap 8
    """
    config = _config(ctx, parallel=parallel)
    graph = read_graph_file(graph_file)
    _progress(silent, f"🔍 暴力求解 {graph_file}: n={graph.n}, m={graph.m}, ℓ={pages}")

    if pages == 2:
        found = brute_force_subham(graph, cap or config.oracle_cap, config.parallel, config.max_workers)
    else:
        found = brute_force_book_embedding(graph, pages, cap or config.multi_page_oracle_cap)
    verdict = Verdict.YES if found is not None else Verdict.NO

    report = RunReport("oracle", graph_file, pages, verdict=verdict.value)
    if json_path:
        payload = {"verdict": verdict.value, "pages": pages, "embedding": found.to_dict() if found else None}
        write_text(json_path, _dump_json(payload))
        report.add_artifact(json_path)
    _finish(report, report_path, verbose)

    click.echo(verdict.value)
    _exit_with(ctx, verdict)


@click.command()
@graph_argument
@click.argument("embedding_file", type=click.Path(dir_okay=False), metavar="EMBEDDING")
@pages_option
@click.pass_context
@handle_errors
def verify(ctx: click.Context, graph_file: str, embedding_file: str, pages: int) -> None:
    """
    校验书嵌入文件

    GRAPH: 图文件; EMBEDDING: {"order": [...], "pages": {"<边编号>": 页码}}

    合法时输出 valid 并以 0 退出, 否则逐条列出问题并以 1 退出。
    """
    graph = read_graph_file(graph_file)
    embedding = read_embedding_file(embedding_file)
    problems = embedding_problems(graph, embedding, pages)
    for problem in problems:
        click.echo(f"❌ {problem}", err=True)
    click.echo("invalid" if problems else "valid")
    _exit_with(ctx, Verdict.NO if problems else Verdict.YES)


@click.command()
@click.argument("kind", type=click.Choice([kind.value for kind in InstanceKind]))
@click.argument("n", type=click.IntRange(min=1))
@click.option("--seed", type=int, default=0, show_default=True, help="随机种子")
@click.option("--fen", type=click.IntRange(min=0), default=3, show_default=True, help="random-fen 的非树边数")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="写到指定文件 (默认标准输出)")
@format_option
@handle_errors
def gen(kind: str, n: int, seed: int, fen: int, output: Optional[str], fmt: str) -> None:
    """
    生成实例

    KIND: cycle, theta, planar-deg4 或 random-fen; N: 顶点数

    相同的 (KIND, N, --seed, --fen) 总是生成相同的图。
    """
    graph = generate_instance(kind, n, seed, fen=fen)
    graph, _ = relabel_for_format(graph, GraphFormat(fmt))
    content = serialize_graph(graph, GraphFormat(fmt))
    if output:
        write_text(output, content)
    else:
        click.echo(content, nl=False)


@click.command()
@graph_argument
@click.argument("embedding_file", type=click.Path(dir_okay=False), metavar="EMBEDDING")
@svg_option
@handle_errors
def render(graph_file: str, embedding_file: str, svg_path: Optional[str]) -> None:
    """
    把书嵌入文件渲染为SVG

    GRAPH: 图文件; EMBEDDING: 书嵌入文件。嵌入不合法时拒绝渲染。
    """
    graph = read_graph_file(graph_file)
    embedding = read_embedding_file(embedding_file)
    svg = render_svg(graph, embedding)
    if svg_path:
        write_text(svg_path, svg)
    else:
        click.echo(svg, nl=False)


@click.command()
@click.option("--verbose", "-v", is_flag=True, help="显示依赖库版本")
def version(verbose: bool) -> None:
    """
    显示版本信息
    """
    click.echo(f"book-embed version {__version__}")

    if verbose:
        click.echo(f"Python: {sys.version}")
        click.echo("\n依赖库版本:")
        for lib, ver in _get_dependency_versions().items():
            click.echo(f"  {lib}: {ver}")


def _get_dependency_versions() -> Dict[str, str]:
    """
    获取关键依赖库的版本信息

    Returns:
        Dict[str, str]: 依赖库版本字典
    """
    from importlib import import_module

    dependencies: Dict[str, str] = {}
    for name, module in (("click", "click"), ("rich", "rich"), ("pyyaml", "yaml"), ("networkx", "networkx")):
        try:
            dependencies[name] = getattr(import_module(module), "__version__", "未知")
        except ImportError:
            dependencies[name] = "未安装"
    return dependencies
