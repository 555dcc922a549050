"""
配置加载模块

从YAML文件加载求解器配置, 与默认配置合并并校验类型。
"""

from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Mapping, Optional

import yaml

from .constants import DEFAULT_CONFIG
from .exceptions import ConfigError, handle_file_error, validate_config


@dataclass
class SolverConfig:
    """
    求解器配置

    Attributes:
        oracle_cap: 2页暴力求解的顶点上限
        multi_page_oracle_cap: ℓ>=3 暴力求解的顶点上限
        width_cap: 球面切分分解允许的最大宽度
        audit: 是否执行镜像封闭与见证抽样审计
        audit_samples: 每个节点抽样审计的表项数
        parallel: 是否按层并行处理SPQR节点与暴力枚举前缀
        max_workers: 线程池大小
        log_level: 日志级别
    """
    oracle_cap: int = DEFAULT_CONFIG["oracle_cap"]
    multi_page_oracle_cap: int = DEFAULT_CONFIG["multi_page_oracle_cap"]
    width_cap: int = DEFAULT_CONFIG["width_cap"]
    audit: bool = DEFAULT_CONFIG["audit"]
    audit_samples: int = DEFAULT_CONFIG["audit_samples"]
    parallel: bool = DEFAULT_CONFIG["parallel"]
    max_workers: int = DEFAULT_CONFIG["max_workers"]
    log_level: str = DEFAULT_CONFIG["log_level"]

    def __post_init__(self) -> None:
        for spec in fields(self):
            value = getattr(self, spec.name)
            expected = type(DEFAULT_CONFIG[spec.name])
            # bool 是 int 的子类, 需要单独排除
            if expected is int and (isinstance(value, bool) or not isinstance(value, int)):
                raise ConfigError(f"应为整数, 实际为 {value!r}", spec.name)
            if expected is not int and not isinstance(value, expected):
                raise ConfigError(f"应为 {expected.__name__}, 实际为 {value!r}", spec.name)

        for key in ("oracle_cap", "multi_page_oracle_cap", "width_cap", "max_workers"):
            if getattr(self, key) < 1:
                raise ConfigError("必须为正整数", key)
        if self.audit_samples < 0:
            raise ConfigError("不能为负数", "audit_samples")

        self.log_level = self.log_level.upper()
        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ConfigError(f"未知的日志级别 {self.log_level}", "log_level")

    def with_overrides(self, **overrides: Any) -> "SolverConfig":
        """
        返回覆盖部分配置项后的新配置, 值为 None 的项被忽略

        Args:
            **overrides: 需要覆盖的配置项

        Returns:
            SolverConfig: 新配置
        """
        merged = asdict(self)
        merged.update({key: value for key, value in overrides.items() if value is not None})
        return SolverConfig(**merged)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return asdict(self)


def config_from_mapping(data: Mapping[str, Any], config_file: Optional[str] = None) -> SolverConfig:
    """
    由字典构造配置, 未知键视为错误

    Args:
        data: 配置字典
        config_file: 来源文件, 用于错误信息

    Returns:
        SolverConfig: 配置对象

    Raises:
        ConfigError: 存在未知配置项或类型不符
    """
    unknown = sorted(set(data) - set(DEFAULT_CONFIG))
    if unknown:
        raise ConfigError(f"未知配置项: {', '.join(unknown)}", config_file=config_file)

    merged = dict(DEFAULT_CONFIG)
    merged.update(data)
    try:
        validate_config(merged, DEFAULT_CONFIG)
        return SolverConfig(**merged)
    except ConfigError as e:
        e.config_file = config_file
        raise


def load_config(path: Optional[str] = None) -> SolverConfig:
    """
    加载YAML配置文件

    Args:
        path: 配置文件路径, 为 None 时返回默认配置

    Returns:
        SolverConfig: 配置对象

    Raises:
        ConfigError: 文件内容不是映射或无法解析
    """
    if path is None:
        return SolverConfig()

    handle_file_error(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"YAML解析失败: {e}", config_file=path) from e

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("配置文件顶层必须是映射", config_file=path)

    return config_from_mapping(data, config_file=path)
