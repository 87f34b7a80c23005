# pylint: disable=missing-module-docstring

from .monomial import ONE, PARAM_S, PARAM_T, Monomial
from .multipoly import (
    X,
    MultiPoly,
    Scalar,
    evaluate,
    grading,
    partial_derivative,
    poly_add,
    poly_mul,
    poly_pow,
    substitute,
    unify,
)
from .serialization import dumps, emit, from_json, to_json, to_latex, to_text
