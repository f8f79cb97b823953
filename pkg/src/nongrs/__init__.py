"""Finite-field codes C_k(S, v, inf): construction, classification, weight
distributions, Schur squares and self-orthogonality."""

from .code import LinearCode, WeightDistribution, classify, dual
from .constructions import EvaluationSet, ScalingVector, ck_infty, ck_mu, egrs, grs
from .errors import BudgetExceeded, InexactDivision, NongrsError, ValidationError
from .field import FieldSpec, build_field

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "EvaluationSet", "FieldSpec", "InexactDivision", "LinearCode",
    "NongrsError", "ScalingVector", "ValidationError", "WeightDistribution", "build_field",
    "ck_infty", "ck_mu", "classify", "dual", "egrs", "grs",
]
