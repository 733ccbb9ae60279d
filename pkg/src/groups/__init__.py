"""
Finite Matrix Groups Package
"""

from src.groups.catalog import SL2_CATALOG, GroupName, named_group
from src.groups.matgroup import FiniteMatGroup, closure, group_from_json
from src.groups.matrices import CycMatrix

__all__ = [
    "CycMatrix",
    "FiniteMatGroup",
    "closure",
    "group_from_json",
    "GroupName",
    "named_group",
    "SL2_CATALOG",
]
