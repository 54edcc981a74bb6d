# overdurfee/__init__.py
"""
Overpartitions, successive Durfee squares and Rogers-Ramanujan-Gordon identities.
"""

__version__ = "1.0.0"

from overdurfee.components.partition_core import (
    Overpartition,
    Partition,
    enumerate_overpartitions,
    format_overpartition,
    parse_overpartition,
)
from overdurfee.components.durfee import dissect, generalized_durfee_size, num_successive_squares
from overdurfee.components.rrg import count_dki, is_rrg
from overdurfee.components.weighted_maps import phi, thm21_forward, thm21_inverse

__all__ = [
    'Overpartition',
    'Partition',
    'enumerate_overpartitions',
    'format_overpartition',
    'parse_overpartition',
    'dissect',
    'generalized_durfee_size',
    'num_successive_squares',
    'count_dki',
    'is_rrg',
    'phi',
    'thm21_forward',
    'thm21_inverse'
]
