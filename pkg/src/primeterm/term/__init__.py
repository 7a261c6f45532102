"""Arithmetic terms: tree, text grammar, printer and exact evaluator."""
from .evaluate import DEFAULT_MAX_BITS, EvalConfig, eval_term
from .fmt import format_term
from .nodes import (Add, Call, Const, FloorDiv, Mod, Monus, Mul, Pow, Sub,
                    Term, Var, as_term, call, free_vars, monus, size)
from .parse import parse_term

__all__ = [
    "Add", "Call", "Const", "DEFAULT_MAX_BITS", "EvalConfig", "FloorDiv", "Mod",
    "Monus", "Mul", "Pow", "Sub", "Term", "Var", "as_term", "call", "eval_term",
    "format_term", "free_vars", "monus", "parse_term", "size",
]
