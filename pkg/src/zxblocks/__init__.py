"""Block-structured ZX-calculus diagrams with a matrix semantics, a rewrite
rule catalog, circuit ingestion and structural equality by e-graphs."""

from .angle import PI, ZERO, Angle, parse_angle
from .core import (
    Box,
    Cap,
    Cast,
    Compose,
    Cup,
    Diagram,
    Empty,
    Stack,
    Swap,
    Wire,
    X,
    Z,
    ZXError,
    a_swap,
    adjoint,
    colorswap,
    dims,
    n_wire,
    transpose,
    zx_shift,
)
from .fmt import parse_diagram, to_sexp
from .prop import proportional
from .semantics import evaluate

__version__ = "0.1.0"

__all__ = [
    "PI", "ZERO", "Angle", "Box", "Cap", "Cast", "Compose", "Cup", "Diagram", "Empty", "Stack",
    "Swap", "Wire", "X", "Z", "ZXError", "a_swap", "adjoint", "colorswap", "dims", "evaluate",
    "n_wire", "parse_angle", "parse_diagram", "proportional", "to_sexp", "transpose", "zx_shift",
]
