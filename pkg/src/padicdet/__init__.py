"""Exact determinants of integer matrices by p-adic lifting and multimodular CRT."""

from .engine import DetReport, EnginePolicy, det, det_multimodular, det_padic
from .matrix import (
    BoundPair,
    DimensionError,
    IntegerMatrix,
    MatrixFormatError,
    hadamard_bound,
    parse_matrix,
    parse_matrix_json,
    random_matrix,
    serialize_matrix,
    serialize_matrix_json,
    solution_bounds,
)
from .oracles import det_bareiss, det_cofactor

__all__ = [
    "BoundPair",
    "DetReport",
    "DimensionError",
    "EnginePolicy",
    "IntegerMatrix",
    "MatrixFormatError",
    "det",
    "det_bareiss",
    "det_cofactor",
    "det_multimodular",
    "det_padic",
    "hadamard_bound",
    "parse_matrix",
    "parse_matrix_json",
    "random_matrix",
    "serialize_matrix",
    "serialize_matrix_json",
    "solution_bounds",
]
