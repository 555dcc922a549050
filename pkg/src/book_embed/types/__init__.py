"""
类型模块

套索类型 (ψ, M, S)、括号串编码、类型枚举与组合, 以及SPQR节点类型。
"""

from .combine import (
    check_compatible,
    combine_types,
    enumerate_triples,
    join_types,
    relabel_type,
    try_combine,
)
from .dyck import dyck_decode, dyck_encode, is_dyck_word, noncrossing_matchings
from .enumerate import enumerate_types, enumerate_types_by_matchings
from .models import Crossing, NooseType, Token, make_type, token_key
from .node_types import (
    GOOD_TYPES,
    POLE_BOUNDARY,
    chain_combine,
    full_node_type,
    good_level,
    is_bad,
    is_dirty,
    make_node_type,
    mirror_type,
    swap_poles,
)

__all__ = [
    "Crossing",
    "NooseType",
    "Token",
    "make_type",
    "token_key",
    "dyck_encode",
    "dyck_decode",
    "is_dyck_word",
    "noncrossing_matchings",
    "enumerate_types",
    "enumerate_types_by_matchings",
    "check_compatible",
    "combine_types",
    "try_combine",
    "join_types",
    "enumerate_triples",
    "relabel_type",
    "GOOD_TYPES",
    "POLE_BOUNDARY",
    "chain_combine",
    "full_node_type",
    "good_level",
    "is_bad",
    "is_dirty",
    "make_node_type",
    "mirror_type",
    "swap_poles",
]
