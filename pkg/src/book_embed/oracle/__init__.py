"""
暴力求解与校验模块

固定书脊顺序的页分配、2页与 ℓ 页书嵌入的穷举求解, 以及书嵌入与见证的校验。
"""

from .brute_force import (
    brute_force_book_embedding,
    brute_force_book_thickness,
    brute_force_subham,
    pages_given_order,
)
from .verify import check_embedding, crossing_pairs, embedding_problems, verify_embedding, verify_witness

__all__ = [
    "pages_given_order",
    "brute_force_subham",
    "brute_force_book_embedding",
    "brute_force_book_thickness",
    "check_embedding",
    "crossing_pairs",
    "embedding_problems",
    "verify_embedding",
    "verify_witness",
]
