"""
常量定义模块

定义项目中使用的各种常量，包括节点种类、判定结果、角色、核化规则、
实例种类、退出码以及默认配置。
"""

from enum import Enum, IntEnum
from typing import Any, Dict


class NodeKind(Enum):
    """SPQR树节点种类"""
    S = "S"    # 串联 (环骨架)
    P = "P"    # 并联 (平行边束)
    Q = "Q"    # 单条实边
    R = "R"    # 三连通


class Verdict(Enum):
    """判定结果"""
    YES = "yes"
    NO = "no"


class VertexRole(IntEnum):
    """边界顶点在类型中的角色, 数值即度数"""
    UNUSED = 0    # 未使用
    END = 1       # 路径端点
    INNER = 2     # 路径内部


class KernelRule(Enum):
    """核化规则"""
    PENDANT_DELETE = "pendant-delete"
    EDGE_CONTRACT = "edge-contract"
    PATH_SHRINK = "path-shrink"


class InstanceKind(Enum):
    """实例生成器支持的图种类"""
    CYCLE = "cycle"
    THETA = "theta"
    PLANAR_DEG4 = "planar-deg4"
    RANDOM_FEN = "random-fen"


class ExitCode(IntEnum):
    """命令行退出码"""
    YES = 0
    NO = 1
    ERROR = 2


class GraphFormat(Enum):
    """图文件格式"""
    EDGES = "edges"
    JSON = "json"


# 节点类型边界上的两条侧边与两极
SIDE_LEFT = "L"
SIDE_RIGHT = "R"
POLE_S = "s"
POLE_T = "t"

# P节点坏序列的上限
MAX_BAD_TYPES = 8
MAX_DIRTY_TYPES = 4
MAX_CLEAN_BAD_TYPES = 4

# 每条子曲线至多两个穿越点
MAX_CROSSINGS_PER_SUBCURVE = 2

# 类型数量上界 28^|O|
TYPE_COUNT_BASE = 28

# 暴力枚举与宽度上限
DEFAULT_ORACLE_CAP = 11
DEFAULT_MULTI_PAGE_ORACLE_CAP = 8
DEFAULT_WIDTH_CAP = 12

# 球面切分分解回溯搜索的最大扩展次数
SPHERECUT_SEARCH_LIMIT = 20000

# 2页核的大小上界系数: |V| <= 12k-8, |E| <= 14k-9
TWO_PAGE_VERTEX_BOUND = (12, -8)
TWO_PAGE_EDGE_BOUND = (14, -9)

# SVG 渲染参数
SVG_VERTEX_SPACING = 60
SVG_MARGIN = 40
SVG_VERTEX_RADIUS = 5
SVG_PAGE_COLORS = ("#2e7d32", "#c62828", "#1565c0", "#6a1b9a", "#ef6c00", "#00838f")

# 默认配置
DEFAULT_CONFIG: Dict[str, Any] = {
    "oracle_cap": DEFAULT_ORACLE_CAP,
    "multi_page_oracle_cap": DEFAULT_MULTI_PAGE_ORACLE_CAP,
    "width_cap": DEFAULT_WIDTH_CAP,
    "audit": True,
    "audit_samples": 8,
    "parallel": False,
    "max_workers": 4,
    "log_level": "WARNING",
}
