"""Arithmetic terms for number-theoretic functions, evaluated exactly."""
from .errors import (BitLimitExceeded, DomainError, ExactDivisionViolated,
                     NoWitness, NonLinearExponent, PrimeTermError,
                     RangeExceeded, SlotCollision, TermSyntaxError,
                     UnboundVariable)
from .term import EvalConfig, eval_term, format_term, parse_term

__version__ = "0.1.0"

__all__ = [
    "BitLimitExceeded", "DomainError", "EvalConfig", "ExactDivisionViolated",
    "NoWitness", "NonLinearExponent", "PrimeTermError", "RangeExceeded",
    "SlotCollision", "TermSyntaxError", "UnboundVariable", "eval_term",
    "format_term", "parse_term",
]
