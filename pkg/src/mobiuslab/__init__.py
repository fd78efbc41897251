"""Boolean functions under the Möbius transform, with a focus on coincident
functions (the fixed points of the transform)."""

from .core import (
    N_MAX,
    ZERO_DEGREE,
    Anf,
    BitTable,
    BooleanFunction,
    DimensionError,
    Valuation,
    anf_of,
    degree,
    evaluate,
    evaluate_anf,
    extend,
    function_of,
    minterm_anf,
    monomial_truth_table,
    weight,
)
from .estimators import BooleanFunctionFeatures, CoincidentProjector, MobiusTransformer, check_truth_tables
from .mobius import is_coincident, phi, transform

__version__ = "0.1.0"

__all__ = [
    "N_MAX",
    "ZERO_DEGREE",
    "Anf",
    "BitTable",
    "BooleanFunction",
    "BooleanFunctionFeatures",
    "CoincidentProjector",
    "DimensionError",
    "MobiusTransformer",
    "Valuation",
    "anf_of",
    "check_truth_tables",
    "degree",
    "evaluate",
    "evaluate_anf",
    "extend",
    "function_of",
    "is_coincident",
    "minterm_anf",
    "monomial_truth_table",
    "phi",
    "transform",
    "weight",
]
