"""Unipotent characters of finite reductive groups: exact degrees,
decomposition-matrix data for non-defining characteristic, and the
verification toolbox (unitriangularity, Craven's perversity ordering,
Harish-Chandra induction, Deligne-Lusztig multiplicities, Brauer trees,
Hecke simple-module counts)."""

from .cyclo import DensePoly, FactoredPoly, cyclotomic, parse_factored
from .degrees import (UnipChar, a_value, A_value, catalog, defect, degree_poly,
                      find_char, group_order_poly, perversity)
from .labels import Bipartition, BetaSymbol, GroupDescriptor, UnipLabel
from .tables import DecompTable, ParamExpr
from .weyl import SignedClass, char_value_B, induce

__all__ = [
    "DensePoly", "FactoredPoly", "cyclotomic", "parse_factored",
    "UnipChar", "a_value", "A_value", "catalog", "defect", "degree_poly",
    "find_char", "group_order_poly", "perversity",
    "Bipartition", "BetaSymbol", "GroupDescriptor", "UnipLabel",
    "DecompTable", "ParamExpr", "SignedClass", "char_value_B", "induce",
]
