"""
日志配置

包内各模块使用 logging.getLogger(__name__), 这里负责挂载 rich 处理器。
"""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

PACKAGE_LOGGER = "book_embed"


def setup_logging(debug: bool = False, level: Optional[str] = None) -> logging.Logger:
    """
    为包日志器安装 RichHandler

    Args:
        debug: 调试模式, 强制使用 DEBUG 级别
        level: 日志级别名称, 默认 WARNING

    Returns:
        logging.Logger: 包日志器
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    resolved = "DEBUG" if debug else (level or "WARNING").upper()
    logger.setLevel(resolved)

    # 重复调用时只保留一个处理器
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=debug,
        rich_tracebacks=debug,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
