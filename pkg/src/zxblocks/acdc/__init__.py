"""ACDC: structural equality of symbolic diagrams by equality saturation."""

from .dimexpr import Add, Const, DimExpr, Mul, Poly, Var, dim_equal, normalize_dim
from .egraph import EGraph, InconsistentDims
from .equiv import Counterexample, EquivResult, refute, struct_equiv
from .laws import LAWS, Law, get_law, instantiate_law
from .terms import Sym, lift, lower, parse_sym, sym_dims, sym_to_sexp

__all__ = [
    "LAWS",
    "Add",
    "Const",
    "Counterexample",
    "DimExpr",
    "EGraph",
    "EquivResult",
    "InconsistentDims",
    "Law",
    "Mul",
    "Poly",
    "Sym",
    "Var",
    "dim_equal",
    "get_law",
    "instantiate_law",
    "lift",
    "lower",
    "normalize_dim",
    "parse_sym",
    "refute",
    "struct_equiv",
    "sym_dims",
    "sym_to_sexp",
]
