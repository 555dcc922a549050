"""
CLI主入口

定义应用程序的主入口点，初始化CLI框架，加载配置并安装日志处理器。
"""

import sys
from typing import Optional

import click

from .. import __version__
from ..common.config import load_config
from ..common.constants import ExitCode
from ..common.exceptions import BookEmbedException
from ..common.log import setup_logging
from .commands import CommandError, decide, embed, gen, kernelize, oracle, render, verify, version


@click.group()
@click.version_option(version=__version__, prog_name="book-embed")
@click.option("--debug", is_flag=True, help="启用调试模式")
@click.option("--config", type=click.Path(exists=True, dir_okay=False), help="YAML配置文件路径")
@click.pass_context
def cli(ctx: click.Context, debug: bool, config: Optional[str]) -> None:
    """
    📖 book-embed - 2页书嵌入判定与构造工具

    基于SPQR树与球面切分分解的子哈密顿性判定, 按反馈边数的核化,
    以及用于对照的暴力求解器。

    退出码: 0 存在嵌入, 1 不存在, 2 输入或参数错误。

    示例:
      book-embed decide k4.edges              # 判定
      book-embed embed g.edges --svg g.svg    # 构造并渲染
      book-embed kernelize g.edges --pages 3  # 核化
      book-embed gen planar-deg4 50 --seed 7  # 生成实例
    """
    # 确保上下文对象存在
    ctx.ensure_object(dict)
    ctx.obj["debug"] = debug
    try:
        ctx.obj["config"] = load_config(config)
    except BookEmbedException as e:
        if debug:
            raise
        raise CommandError(e) from e

    setup_logging(debug, ctx.obj["config"].log_level)
    if debug:
        click.echo("🐛 调试模式已启用", err=True)


# 注册子命令
cli.add_command(decide)
cli.add_command(embed)
cli.add_command(kernelize)
cli.add_command(oracle)
cli.add_command(verify)
cli.add_command(gen)
cli.add_command(render)
cli.add_command(version)


def main() -> None:
    """
    主入口函数

    处理全局异常和用户中断。
    """
    try:
        cli()
    except BookEmbedException as e:
        click.echo(f"❌ 错误: {e}", err=True)
        sys.exit(int(ExitCode.ERROR))
    except KeyboardInterrupt:
        click.echo("\n⏹️  操作已取消", err=True)
        sys.exit(130)
    except Exception as e:
        click.echo(f"💥 意外错误: {e}", err=True)
        click.echo("请使用 --debug 选项获取详细错误信息", err=True)
        sys.exit(int(ExitCode.ERROR))


if __name__ == "__main__":
    main()
