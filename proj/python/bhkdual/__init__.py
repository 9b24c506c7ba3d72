"""Exact duality for quotient Landau-Ginzburg models.

Thin wrapper over the C++ core: every function takes model-file text
(JSON or TOML) and returns the decoded canonical JSON as a dict.
"""

import json as _json

from . import _core

__all__ = [
    "parse_model",
    "dual_model",
    "krawitz_dual",
    "cy_report",
    "weights",
    "verify",
    "krawitz_equivalence",
    "selftest",
]


def parse_model(text):
    """Canonical form of a model file: exponent matrix, group, warnings."""
    return _json.loads(_core.parse_model_json(text))


def dual_model(text):
    """Dual model data: transposed matrix, kernel group, factor maps."""
    return _json.loads(_core.dual_model_json(text))


def krawitz_dual(text):
    """Closed-form transpose-side dual group of a square invertible model."""
    return _json.loads(_core.krawitz_dual_json(text))


def cy_report(text):
    """Calabi-Yau test report for the model's exponent matrix."""
    return _json.loads(_core.cy_report_json(text))


def weights(text, side="primal"):
    """Weight lattice of the model (side='primal') or its dual (side='dual')."""
    return _json.loads(_core.weights_json(text, side))


def verify(text_a, text_b, theorem="main", seed=0):
    """Certificate for a theorem ('main', 'equal-sups', 'cy-corollary')."""
    return _json.loads(_core.verify_json(text_a, text_b, theorem, seed))


def krawitz_equivalence(text, seed=0):
    """Certificate that the three dual-group routes agree on one model."""
    return _json.loads(_core.krawitz_equivalence_json(text, seed))


def selftest(seed=0):
    """Full invariant suite over the bundled corpus."""
    return _json.loads(_core.selftest_json(seed))
