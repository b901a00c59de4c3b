"""Exact model checking, measure synthesis and proof checking for
probabilistic belief.

Rationals are exchanged as :class:`fractions.Fraction`; thresholds may be
given as a Fraction, an int, or a string such as ``"1/2"``.
"""

from fractions import Fraction

from . import _betlogic
from ._betlogic import (
    Error,
    NeighborhoodModel,
    ProbabilityModel,
    builtin_model,
    check_proof,
    load_model,
    normalize_formula,
)

__all__ = [
    "Error",
    "NeighborhoodModel",
    "ProbabilityModel",
    "builtin_model",
    "check_agreement",
    "check_proof",
    "check_properties",
    "conditional_probability",
    "derive_neighborhoods",
    "evaluate",
    "find_countermodel",
    "load_model",
    "normalize_formula",
    "realize_comparative",
    "synthesize",
    "weights",
]


def _threshold(c):
    return str(Fraction(c))


def weights(model):
    return {w: Fraction(v) for w, v in model.weights().items()}


def conditional_probability(model, world, event):
    return Fraction(model.conditional_probability(world, list(event)))


def evaluate(model, world, formula, threshold=None):
    """Truth of `formula` at `world`.

    Probability models need a threshold for K/B formulas; formulas of the
    probability language (``P(h1) >= 1/2``) are evaluated without one.
    Neighborhood models take no threshold.
    """
    if isinstance(model, NeighborhoodModel):
        if threshold is not None:
            raise ValueError("neighborhood models take no threshold")
        return _betlogic.evaluate_neighborhood(model, world, formula)
    if threshold is None:
        return _betlogic.evaluate_linear(model, world, formula)
    return _betlogic.evaluate_probability(model, world, formula, _threshold(threshold))


def derive_neighborhoods(model, threshold):
    return _betlogic.derive_neighborhoods(model, _threshold(threshold))


def synthesize(model, threshold):
    """An agreeing probability model, or None when none exists."""
    return _betlogic.synthesize(model, _threshold(threshold))


def check_agreement(nbhd, prob, threshold):
    return _betlogic.check_agreement(nbhd, prob, _threshold(threshold))


def check_properties(model, mid_threshold=False, conjectured=None, m_max=3):
    c = None if conjectured is None else _threshold(conjectured)
    return _betlogic.check_properties(model, mid_threshold, c, m_max)


def find_countermodel(formula, max_worlds=3, mid_threshold=False):
    """(model, world) falsifying `formula`, or None."""
    return _betlogic.find_countermodel(formula, max_worlds, mid_threshold)


def realize_comparative(text, worlds, full_support=False):
    r = _betlogic.realize_comparative(text, list(worlds), full_support)
    return None if r is None else {w: Fraction(v) for w, v in r.items()}
