"""Exact class arithmetic for Z_2^3-covers of blown-up F_1 with canonical maps of degree 8."""

from .cover import (
    BranchData,
    CoverData,
    Invariants,
    impose_point,
    invariants,
    minimality_check,
    solve_building_data,
    validate_point_type,
)
from .families import FamilyReport, build_family, contract_step, theorem_table
from .group import Character, GroupElement, character, chi_value, parity_matrix
from .picard import DivisorClass, SurfaceModel

__version__ = "0.1.0"
