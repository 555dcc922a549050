"""
通用CLI选项定义

定义可重用的命令行选项，确保各子命令的参数名称与含义一致。
"""

from typing import Callable

import click

from ..common.constants import GraphFormat


def graph_argument(f: Callable) -> Callable:
    """图文件参数"""
    return click.argument("graph_file", type=click.Path(dir_okay=False), metavar="GRAPH")(f)


def pages_option(f: Callable) -> Callable:
    """
    页数选项装饰器

    Args:
        f: 被装饰的函数

    Returns:
        Callable: 装饰后的函数
    """
    return click.option(
        "--pages", "-p",
        type=click.IntRange(1, 64),
        default=2,
        show_default=True,
        help="书嵌入的页数 ℓ",
    )(f)


def output_options(f: Callable) -> Callable:
    """
    输出文件选项组装饰器

    Args:
        f: 被装饰的函数

    Returns:
        Callable: 装饰后的函数
    """
    # 按逆序添加选项，因为装饰器是从下往上执行的
    f = click.option(
        "--report",
        "report_path",
        type=click.Path(dir_okay=False),
        help="把运行报告 (JSON) 写到指定文件",
    )(f)

    f = click.option(
        "--json",
        "json_path",
        type=click.Path(dir_okay=False),
        help="把结果 (JSON) 写到指定文件",
    )(f)

    return f


def svg_option(f: Callable) -> Callable:
    """SVG输出选项装饰器"""
    return click.option(
        "--svg",
        "svg_path",
        type=click.Path(dir_okay=False),
        help="把书嵌入渲染为SVG写到指定文件",
    )(f)


def cap_option(f: Callable) -> Callable:
    """暴力求解规模上限选项装饰器"""
    return click.option(
        "--cap",
        type=click.IntRange(1, 64),
        default=None,
        help="暴力求解的顶点数上限 (默认取配置文件)",
    )(f)


def parallel_option(f: Callable) -> Callable:
    """并行选项装饰器"""
    return click.option(
        "--parallel/--sequential",
        default=None,
        help="是否使用线程池并行 (默认取配置文件)",
    )(f)


def progress_option(f: Callable) -> Callable:
    """
    进度显示选项装饰器

    Args:
        f: 被装饰的函数

    Returns:
        Callable: 装饰后的函数
    """
    f = click.option(
        "--verbose", "-v",
        is_flag=True,
        help="在标准错误流上显示统计表格",
    )(f)

    f = click.option(
        "--silent",
        is_flag=True,
        help="静默模式，不显示进度信息",
    )(f)

    return f


def format_option(f: Callable) -> Callable:
    """图文件格式选项装饰器"""
    return click.option(
        "--format", "-f",
        "fmt",
        type=click.Choice([fmt.value for fmt in GraphFormat]),
        default=GraphFormat.EDGES.value,
        show_default=True,
        help="输出的图格式",
    )(f)
