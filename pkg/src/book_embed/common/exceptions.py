"""
异常层次

输入解析, 前置条件, 分解, 宽度与规模上限, 配置, 渲染与实例生成的错误。
非平面, 不合法的异或与无解的页分配是返回值, 不在这里。
"""

import os
from typing import Any, Iterable, Mapping, Optional


class BookEmbedException(Exception):
    """
    book-embed基础异常类

    每个异常带有错误信息, 可选的处理建议与固定的错误代码。
    """

    def __init__(
        self,
        message: str,
        suggestion: Optional[str] = None,
        error_code: Optional[str] = None
    ):
        super().__init__(message)
        self.message = message
        self.suggestion = suggestion
        self.error_code = error_code

    def __str__(self) -> str:
        result = self.message
        if self.suggestion:
            result += f"\n建议: {self.suggestion}"
        if self.error_code:
            result += f"\n错误代码: {self.error_code}"
        return result


class GraphParseError(BookEmbedException):
    """
    图解析错误

    边列表或JSON文档格式不正确时抛出。
    """

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        source: Optional[str] = None,
        suggestion: Optional[str] = None
    ):
        super().__init__(message, suggestion, "PARSE_ERROR")
        self.line_number = line_number
        self.source = source

    def __str__(self) -> str:
        result = self.message
        if self.source:
            result = f"解析 '{self.source}' 时发生错误: {result}"
        if self.line_number:
            result += f" (第{self.line_number}行)"
        if self.suggestion:
            result += f"\n建议: {self.suggestion}"
        return result


class SelfLoopError(GraphParseError):
    """
    自环错误

    自环不影响书嵌入, 在构造图时直接拒绝。
    """

    def __init__(self, vertex: Any, line_number: Optional[int] = None):
        super().__init__(
            f"不允许自环: {vertex}",
            line_number,
            suggestion="请删除形如 'v v' 的行"
        )
        self.vertex = vertex


class ContractViolationError(BookEmbedException):
    """
    前置条件违反

    调用方传入的参数不满足操作的前置条件。
    """

    def __init__(
        self,
        message: str,
        operation: Optional[str] = None,
        suggestion: Optional[str] = None
    ):
        super().__init__(message, suggestion, "CONTRACT_VIOLATION")
        self.operation = operation

    def __str__(self) -> str:
        result = self.message
        if self.operation:
            result = f"操作 '{self.operation}' 的前置条件不满足: {result}"
        if self.suggestion:
            result += f"\n建议: {self.suggestion}"
        return result


class UnknownElementError(ContractViolationError):
    """
    未知元素错误

    引用了不存在的边编号或节点编号。
    """

    def __init__(self, kind: str, element: Any, operation: Optional[str] = None):
        super().__init__(f"未知的{kind}: {element}", operation)
        self.kind = kind
        self.element = element


class EmbeddingIntegrityError(BookEmbedException):
    """
    嵌入一致性错误

    旋转系统与面遍历不一致, 不满足欧拉公式, 或书嵌入的同一页上有交叉边。
    """

    def __init__(self, message: str, suggestion: Optional[str] = None):
        suggestion = suggestion or "旋转系统应来自平面性检测的结果"
        super().__init__(message, suggestion, "EMBEDDING_INTEGRITY")


class DecompositionError(BookEmbedException):
    """
    分解错误

    SPQR树或球面切分分解无法构造。
    """

    def __init__(self, message: str, stage: Optional[str] = None):
        super().__init__(message, None, "DECOMPOSITION_ERROR")
        self.stage = stage

    def __str__(self) -> str:
        result = self.message
        if self.stage:
            result = f"[{self.stage}] {result}"
        return result


class WidthCapExceededError(BookEmbedException):
    """
    宽度超限

    球面切分分解的宽度超过配置上限, 动态规划代价不可接受。
    """

    def __init__(self, width: int, cap: int):
        message = f"分解宽度 {width} 超过上限 {cap}"
        suggestion = "请在配置文件中调大 width_cap, 或先对图做核化"
        super().__init__(message, suggestion, "WIDTH_CAP")
        self.width = width
        self.cap = cap


class InternalInconsistencyError(BookEmbedException):
    """
    内部不一致

    重建的见证或嵌入未通过校验, 说明实现存在缺陷。
    """

    def __init__(self, message: str, stage: Optional[str] = None):
        suggestion = "请携带输入图与 --debug 输出提交问题报告"
        super().__init__(message, suggestion, "INTERNAL_INCONSISTENCY")
        self.stage = stage

    def __str__(self) -> str:
        result = self.message
        if self.stage:
            result = f"[{self.stage}] {result}"
        if self.suggestion:
            result += f"\n建议: {self.suggestion}"
        return result


class OracleCapError(BookEmbedException):
    """
    暴力求解规模超限

    顶点数超过暴力枚举允许的上限。
    """

    def __init__(self, n: int, cap: int):
        message = f"顶点数 {n} 超过暴力求解上限 {cap}"
        suggestion = "请使用 --cap 调整上限, 或改用 decide 命令"
        super().__init__(message, suggestion, "ORACLE_CAP")
        self.n = n
        self.cap = cap


class ConfigError(BookEmbedException):
    """
    配置错误

    配置文件加载或配置项验证失败时抛出。
    """

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        config_file: Optional[str] = None
    ):
        suggestion = "请检查配置文件格式和配置项的有效性"
        super().__init__(message, suggestion, "CONFIG_ERROR")
        self.config_key = config_key
        self.config_file = config_file

    def __str__(self) -> str:
        result = self.message
        if self.config_key:
            result = f"配置项 '{self.config_key}' 错误: {result}"
        if self.config_file:
            result += f" (配置文件: {self.config_file})"
        if self.suggestion:
            result += f"\n建议: {self.suggestion}"
        return result


class RenderError(BookEmbedException):
    """
    渲染错误

    嵌入无效或输出失败时拒绝渲染。
    """

    def __init__(
        self,
        message: str,
        render_format: Optional[str] = None,
        suggestion: Optional[str] = None
    ):
        super().__init__(message, suggestion, "RENDER_ERROR")
        self.render_format = render_format

    def __str__(self) -> str:
        result = self.message
        if self.render_format:
            result = f"生成 {self.render_format} 输出时发生错误: {result}"
        if self.suggestion:
            result += f"\n建议: {self.suggestion}"
        return result


class InputFileError(BookEmbedException):
    """
    文件访问错误

    输入文件不存在或不可读。
    """

    def __init__(self, file_path: str, reason: str = "不存在"):
        message = f"文件{reason}: {file_path}"
        suggestion = "请检查路径是否正确，或使用绝对路径"
        super().__init__(message, suggestion, "FILE_ERROR")
        self.file_path = file_path


class GenerationError(BookEmbedException):
    """
    实例生成错误

    未知的实例种类或参数非法。
    """

    def __init__(self, message: str, kind: Optional[str] = None):
        suggestion = "支持的种类: cycle, theta, planar-deg4, random-fen"
        super().__init__(message, suggestion, "GENERATION_ERROR")
        self.kind = kind


# 异常处理工具函数
def handle_file_error(file_path: str, operation: str = "读取") -> None:
    """
    处理文件相关错误的通用函数

    Args:
        file_path: 文件路径
        operation: 操作类型

    Raises:
        InputFileError: 文件不存在或无权限
    """
    if not os.path.exists(file_path):
        raise InputFileError(file_path)

    if not os.access(file_path, os.R_OK):
        raise InputFileError(file_path, f"无权限{operation}")


def validate_config(config_dict: Mapping[str, Any], required_keys: Iterable[str]) -> None:
    """
    验证配置字典的完整性

    Args:
        config_dict: 配置字典
        required_keys: 必需的配置键列表

    Raises:
        ConfigError: 当配置不完整时
    """
    missing_keys = [key for key in required_keys if key not in config_dict]

    if missing_keys:
        message = f"缺少必需的配置项: {', '.join(missing_keys)}"
        raise ConfigError(message)
