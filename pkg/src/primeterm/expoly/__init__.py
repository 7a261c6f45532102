"""Exponential polynomials, single-fold relations and the prime equations."""
from .build import VARIANTS, build_F, f32_parts, fhat_parts
from .emit import emit, parse_json
from .normal import m4_normal_form
from .plan import HypercubePlan, qhat_plan, t_term, u_term
from .poly import ExpoMonomial, ExpoPoly, LinForm, ep_arith, expand_stats, pow2, x
from .registry import (RELATIONS, Bound, SingleFoldRelation, Witness, bounds,
                       build_relation, global_bound, witness)

__all__ = [
    "Bound", "ExpoMonomial", "ExpoPoly", "HypercubePlan", "LinForm", "RELATIONS",
    "SingleFoldRelation", "VARIANTS", "Witness", "bounds", "build_F", "build_relation",
    "emit", "ep_arith", "expand_stats", "f32_parts", "fhat_parts", "global_bound",
    "m4_normal_form", "parse_json", "pow2", "qhat_plan", "t_term", "u_term", "witness", "x",
]
