"""Abstract dialectical frameworks: semantics via the ultimate approximation of the model operator."""

from .config import DEFAULT_LIMITS, Limits
from .core import (
    Adf, And, Atom, Const, Diagnostic, Formula, Iff, Imp, Neg, Or, ThreeValued, TruthTable,
    TwoValued, Vocabulary, Xor, eval_two, parents, truth_table, validate,
)
from .errors import AdfError, CapExceeded, NotAModel, ParseError, ValidationError
from .operators import apply_G, completions, gamma, leq_i
from .parsing import format_adf, parse_adf, parse_interp, print_interp
from .semantics import (
    Semantics, enumerate_semantics, grounded, is_admissible, is_complete, is_grounded, is_model,
    is_preferred, is_stable, reduct,
)

__all__ = [
    "Adf", "AdfError", "And", "Atom", "CapExceeded", "Const", "DEFAULT_LIMITS", "Diagnostic",
    "Formula", "Iff", "Imp", "Limits", "Neg", "NotAModel", "Or", "ParseError", "Semantics",
    "ThreeValued", "TruthTable", "TwoValued", "ValidationError", "Vocabulary", "Xor", "apply_G",
    "completions", "enumerate_semantics", "eval_two", "format_adf", "gamma", "grounded",
    "is_admissible", "is_complete", "is_grounded", "is_model", "is_preferred", "is_stable",
    "leq_i", "parents", "parse_adf", "parse_interp", "print_interp", "reduct", "truth_table",
    "validate",
]
